use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Value};
use slag_core::arc::load_arc_file;
use slag_core::engine::{gt_hypotheses_check, overlap_agreement, pde_residual, GtOptions, ResidualGrid};
use slag_core::geometry::{chart_residuals, FdScheme};
use slag_core::io::{dec, deserialize_charts, export_mesh, serialize_charts, write_atomic, MeshGrid, MeshMode, Precision, Report, RunConfig};
use slag_core::oracle::{branch_separation, harvey_lawson_sample, plane_oracle, unit_circle_residual, OracleResult, SeparationOptions};
use slag_core::{build_atlas, existence_gate, normalize_at, rotation_number, ArcSpec, Chart, Error, Gate, RadiusEstimate, TwoFloat};

use crate::{Command, MeshKind, OracleKind};

pub fn run(cfg: &RunConfig, cmd: &Command) -> Result<Report> {
    let echo = json!({ "run": cfg, "command": cmd });
    match cmd {
        Command::Extend { arc, at, charts } => extend(cfg, echo, arc, *at, charts.as_deref()),
        Command::Residual { charts, grid, directions, h } => residual(cfg, echo, charts, *grid, *directions, *h),
        Command::GtCheck { arc, at } => gt_check(cfg, echo, arc, *at),
        Command::Oracle { which } => oracle(cfg, echo, which),
        Command::Atlas { arc, charts, samples } => atlas(cfg, echo, arc, charts.as_deref(), *samples),
        Command::Mesh { charts, mode, mesh, nt, nsigma, nu, t_half_width } => {
            let grid = MeshGrid {
                t_half_width: *t_half_width,
                sigma_max: cfg.sigma_max,
                nt: *nt,
                nsigma: *nsigma,
                nu: *nu,
                seed: cfg.seed,
            };
            let mode = match mode {
                MeshKind::Reduced => MeshMode::Reduced,
                MeshKind::Embedded => MeshMode::Embedded,
            };
            let charts = read_charts(charts)?;
            let count = export_mesh(&charts, mode, &grid, mesh)?;
            let mut r = Report::new("mesh", &echo);
            r.value("charts", json!(charts.len()));
            r.value("records", json!(count));
            Ok(r)
        }
    }
}

fn load_arc(path: &Path, cfg: &RunConfig) -> Result<ArcSpec> {
    let mut arc = load_arc_file(path).with_context(|| format!("reading arc {}", path.display()))?;
    arc.degree_cap = cfg.degree_cap;
    Ok(arc)
}

fn read_charts(path: &Path) -> Result<Vec<Chart>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading charts {}", path.display()))?;
    Ok(deserialize_charts(&text)?)
}

fn default_center(arc: &ArcSpec) -> f64 {
    if arc.closed {
        0.0
    } else {
        0.5 * (arc.domain.0 + arc.domain.1)
    }
}

fn radius_json(r: &RadiusEstimate) -> Value {
    json!({ "C": dec(r.c), "M": dec(r.m), "rho": dec(r.rho_sigma), "fit": dec(r.fit_quality), "rho_t": dec(r.rho_t) })
}

/// Records the winding data of a closed arc; false when the gate obstructs.
fn gate_checks(r: &mut Report, arc: &ArcSpec, n: usize) -> Result<bool> {
    if !arc.closed {
        return Ok(true);
    }
    r.value("rotation_number", json!(rotation_number(arc)?));
    let shift = match existence_gate(arc, n)? {
        Gate::Ok => 0,
        Gate::Obstruction { shift } => shift,
    };
    r.check("existence_gate", shift == 0, shift as f64, 0.0);
    Ok(shift == 0)
}

fn extend(cfg: &RunConfig, echo: Value, path: &Path, at: Option<f64>, out: Option<&Path>) -> Result<Report> {
    let arc = load_arc(path, cfg)?;
    let mut r = Report::new("extend", &echo);
    if !gate_checks(&mut r, &arc, cfg.n)? {
        return Ok(r);
    }
    let s0 = at.unwrap_or_else(|| default_center(&arc));
    let chart = match cfg.precision {
        Precision::Double => Chart::build::<f64>(&arc, s0, cfg.n, cfg.branch, cfg.order)?,
        Precision::Extended => Chart::build::<TwoFloat>(&arc, s0, cfg.n, cfg.branch, cfg.order)?,
    };
    r.value("radius", radius_json(&chart.radius));
    let half = cfg.sigma_max.min(0.5 * chart.radius.rho_t);
    let res = pde_residual(&chart.phi, &ResidualGrid::square(half, 11))?;
    r.bound("pde_residual", res.max_pde, cfg.tol(1e-10));
    if let Some(p) = out {
        write_atomic(p, serialize_charts(std::slice::from_ref(&chart)).as_bytes())?;
    }
    Ok(r)
}

fn residual(cfg: &RunConfig, echo: Value, path: &Path, grid: usize, directions: usize, h: f64) -> Result<Report> {
    let charts = read_charts(path)?;
    let fd = FdScheme { h, richardson: false };
    let (mut pde, mut om, mut up, mut mu) = (0.0_f64, 0.0_f64, 0.0_f64, 0.0_f64);
    let mut samples = 0;
    for c in &charts {
        let g = ResidualGrid::square(cfg.sigma_max.min(0.5 * c.radius.rho_t), grid);
        let rep = chart_residuals(c, &g, directions, cfg.seed, fd)?;
        pde = pde.max(rep.max_pde);
        om = om.max(rep.max_omega.unwrap_or(0.0));
        up = up.max(rep.max_upsilon.unwrap_or(0.0));
        mu = mu.max(rep.max_momentum.unwrap_or(0.0));
        samples += rep.samples;
    }
    let mut r = Report::new("residual", &echo);
    r.value("charts", json!(charts.len()));
    r.value("samples", json!(samples));
    r.bound("pde", pde, cfg.tol(1e-10));
    r.bound("omega", om, cfg.tol(1e-8));
    r.bound("upsilon", up, cfg.tol(1e-8));
    r.bound("momentum", mu, cfg.tol(1e-14));
    Ok(r)
}

fn gt_check(cfg: &RunConfig, echo: Value, path: &Path, at: Option<f64>) -> Result<Report> {
    let arc = load_arc(path, cfg)?;
    let na = normalize_at(&arc, at.unwrap_or_else(|| default_center(&arc)), cfg.n)?;
    let opts = GtOptions::default();
    let g = gt_hypotheses_check(&na.f0, cfg.n, &opts)?;
    let mut r = Report::new("gt-check", &echo);
    r.bound("g_vanishes_on_axis", g.g_at_zero, cfg.tol(opts.tol_zero));
    r.bound("degenerate_partials_vanish", g.degenerate_partials, cfg.tol(opts.tol_zero));
    r.bound("partial_triple", g.triple_error, cfg.tol(opts.tol_triple));
    r.check("indicial_positive", g.indicial_min > 0.0, g.indicial_min, 0.0);
    r.value("triple", json!(g.triple.iter().map(|x| dec(*x)).collect::<Vec<_>>()));
    r.value("expected_triple", json!(g.expected_triple.iter().map(|x| dec(*x)).collect::<Vec<_>>()));
    r.real("fd_spread", g.fd_spread);
    Ok(r)
}

fn record_oracle(r: &mut Report, o: &OracleResult) {
    r.check(&o.name, o.pass, o.max_residual, o.tolerance);
    r.value("samples", json!(o.samples));
    for (k, v) in &o.metrics {
        r.real(k, *v);
    }
}

fn oracle(cfg: &RunConfig, echo: Value, which: &OracleKind) -> Result<Report> {
    let mut r = Report::new("oracle", &echo);
    let o = match which {
        OracleKind::HarveyLawson { m, c, samples } => harvey_lawson_sample(*m, *c, *samples, cfg.seed, cfg.tol(1e-9))?,
        OracleKind::Circle { samples, at } => {
            // Local charts exist even where the global gate obstructs.
            let arc = ArcSpec::unit_circle(cfg.degree_cap);
            let chart = match cfg.precision {
                Precision::Double => Chart::build::<f64>(&arc, *at, cfg.n, cfg.branch, cfg.order)?,
                Precision::Extended => Chart::build::<TwoFloat>(&arc, *at, cfg.n, cfg.branch, cfg.order)?,
            };
            unit_circle_residual(&chart, cfg.sigma_max, *samples, cfg.seed, cfg.tol(1e-8))?
        }
        OracleKind::Planes { trials } => plane_oracle(cfg.n, *trials, cfg.seed, cfg.tol(1e-12))?,
        OracleKind::Branches { arc } => {
            let arc = load_arc(arc, cfg)?;
            let opts = SeparationOptions { sigma_max: cfg.sigma_max, ..SeparationOptions::default() };
            branch_separation(&arc, cfg.n, cfg.order, &opts, cfg.tol(1e-13))?
        }
    };
    record_oracle(&mut r, &o);
    Ok(r)
}

fn atlas(cfg: &RunConfig, echo: Value, path: &Path, out: Option<&Path>, samples: usize) -> Result<Report> {
    let arc = load_arc(path, cfg)?;
    let mut r = Report::new("atlas", &echo);
    if !gate_checks(&mut r, &arc, cfg.n)? {
        return Ok(r);
    }
    let charts = match cfg.precision {
        Precision::Double => build_atlas::<f64>(&arc, cfg.n, cfg.branch, cfg.spacing, cfg.order)?,
        Precision::Extended => build_atlas::<TwoFloat>(&arc, cfg.n, cfg.branch, cfg.spacing, cfg.order)?,
    };
    let mut pairs: Vec<(usize, usize)> = (1..charts.len()).map(|i| (i - 1, i)).collect();
    if arc.closed && charts.len() > 2 {
        pairs.push((charts.len() - 1, 0));
    }
    let mut overlaps = Vec::with_capacity(pairs.len());
    let mut worst = 0.0_f64;
    for (i, j) in pairs {
        let d = match overlap_agreement(&charts[i], &charts[j], cfg.sigma_max, samples) {
            Ok(d) => d,
            Err(Error::Disjoint) => f64::INFINITY,
            Err(e) => return Err(e.into()),
        };
        worst = worst.max(d);
        overlaps.push(dec(d));
    }
    r.value("charts", json!(charts.len()));
    r.value("centers", json!(charts.iter().map(|c| dec(c.center)).collect::<Vec<_>>()));
    r.value("branches", json!(charts.iter().map(|c| c.branch).collect::<Vec<_>>()));
    r.value("overlaps", json!(overlaps));
    r.bound("overlap_agreement", worst, cfg.tol(1e-6));
    if let Some(p) = out {
        write_atomic(p, serialize_charts(&charts).as_bytes())?;
    }
    Ok(r)
}
