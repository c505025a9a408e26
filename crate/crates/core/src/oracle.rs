//! Closed-form ground truths for end-to-end validation.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arc::{existence_gate, normalize_at, ArcSpec, Gate};
use crate::engine::Chart;
use crate::error::{Error, Result};
use crate::geometry::{
    chart_point, frame_residual, lines_planes, sheet_distance, slag_residual, sphere_chart, sphere_samples, tangent_basis, AmbientPoint, FdScheme,
    PlaneP,
};
use crate::series::TwoFloat;

/// Outcome of one oracle; `pass` iff `max_residual <= tolerance` (plus any
/// structural conditions the oracle documents).
#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult {
    pub name: String,
    pub max_residual: f64,
    pub samples: usize,
    pub pass: bool,
    pub tolerance: f64,
    pub metrics: BTreeMap<String, f64>,
}

impl OracleResult {
    fn new(name: &str, max_residual: f64, samples: usize, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            max_residual,
            samples,
            pass: max_residual <= tolerance,
            tolerance,
            metrics: BTreeMap::new(),
        }
    }
}

fn cone_point(zeta: Complex64, u: &[f64]) -> AmbientPoint {
    AmbientPoint::new(u.iter().map(|&x| zeta * x).collect())
}

/// Samples the Harvey–Lawson cone `L_c = {zeta u : Im(zeta^m) = c}` in `C^m`
/// and measures special Lagrangian residuals with `h = 1e-5`.
///
/// For `c != 0` each point is `r(phi) e^{i phi} u` with
/// `r = (c / sin(m phi))^(1/m)`, `phi` in the central part of a sector where
/// `sin(m phi)` has the sign of `c`; those `m` sectors are the components.
/// For `c = 0` the points lie on the planes `zeta in e^{i k pi/m} R`.
pub fn harvey_lawson_sample(m: usize, c: f64, count: usize, seed: u64, tol: f64) -> Result<OracleResult> {
    if m < 2 || count == 0 || !c.is_finite() {
        return Err(Error::InvalidArgument(format!("need m >= 2, count > 0, finite c; got {m}, {count}, {c}")));
    }
    let mf = m as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dirs = sphere_samples(m, count, seed ^ 0x4c43);
    let fd = FdScheme { h: 1e-5, richardson: false };
    let (mut omega, mut upsilon, mut locus) = (0.0_f64, 0.0_f64, 0.0_f64);
    let mut min_phase = f64::INFINITY;
    let mut sectors = std::collections::BTreeSet::new();
    let sectors_of_sign: Vec<usize> = (0..2 * m).filter(|l| (l % 2 == 0) == (c > 0.0)).collect();
    for i in 0..count {
        let u0 = &dirs[m + i];
        let basis = tangent_basis(u0);
        let res = if c != 0.0 {
            let sector = sectors_of_sign[i % m];
            sectors.insert(sector);
            let phi = (sector as f64 + rng.random_range(0.2..0.8)) * PI / mf;
            let param = move |x: &[f64]| -> Result<AmbientPoint> {
                let r = (c / (mf * x[0]).sin()).powf(1.0 / mf);
                Ok(cone_point(Complex64::from_polar(r, x[0]), &sphere_chart(u0, &basis, &x[1..])))
            };
            let mut at = vec![0.0; m];
            at[0] = phi;
            let res = slag_residual(&param, &at, fd)?;
            let r = (c / (mf * phi).sin()).powf(1.0 / mf);
            locus = locus.max((Complex64::from_polar(r, phi).powu(m as u32).im - c).abs());
            res
        } else {
            let k = i % m;
            sectors.insert(k);
            let dir = Complex64::from_polar(1.0, k as f64 * PI / mf);
            let rho = rng.random_range(0.2..2.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            let param = move |x: &[f64]| -> Result<AmbientPoint> {
                Ok(cone_point(dir * x[0], &sphere_chart(u0, &basis, &x[1..])))
            };
            let mut at = vec![0.0; m];
            at[0] = rho;
            let res = slag_residual(&param, &at, fd)?;
            locus = locus.max((dir * rho).powu(m as u32).im.abs());
            res
        };
        omega = omega.max(res.omega_res);
        upsilon = upsilon.max(res.upsilon_res);
        min_phase = min_phase.min(res.phase.abs());
    }
    let mut out = OracleResult::new("harvey-lawson", omega.max(upsilon), count, tol);
    out.metrics.insert("m".into(), mf);
    out.metrics.insert("c".into(), c);
    out.metrics.insert("omega".into(), omega);
    out.metrics.insert("upsilon".into(), upsilon);
    out.metrics.insert("locus".into(), locus);
    out.metrics.insert("min_abs_phase".into(), min_phase);
    out.metrics.insert("components".into(), sectors.len() as f64);
    Ok(out)
}

/// Half-width of the `t` interval sampled by [`unit_circle_residual`].
pub const CIRCLE_T_HALF_WIDTH: f64 = 0.2;

/// Checks a unit-circle chart against the implicit description
/// `|zeta|^2 = n(|z|^2 - 1)`, `Re(z zeta^n) = 0`, on every branch.
pub fn unit_circle_residual(chart: &Chart, sigma_max: f64, count: usize, seed: u64, tol: f64) -> Result<OracleResult> {
    let n = chart.n;
    let e1: Vec<f64> = (0..n).map(|k| if k == 0 { 1.0 } else { 0.0 }).collect();
    let anchor = chart_point(chart, 0.0, 0.0, &e1)?;
    if (anchor.z[0].norm() - 1.0).abs() > 1e-10 {
        return Err(Error::NotApplicable("chart is not centred on the unit circle".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dirs = sphere_samples(n, count, seed ^ 0x0c1c);
    let mut worst = 0.0_f64;
    let mut on_arc = 0.0_f64;
    let mut samples = 0;
    for j in 0..n {
        let mut c = chart.clone();
        c.branch = j;
        for i in 0..count {
            let t = rng.random_range(-CIRCLE_T_HALF_WIDTH..=CIRCLE_T_HALF_WIDTH);
            let s = rng.random_range(0.0..=sigma_max);
            let u = &dirs[i % dirs.len()];
            let p = chart_point(&c, t, s, u)?;
            let r = circle_equations(&p, u);
            worst = worst.max(r);
            let q = chart_point(&c, t, 0.0, u)?;
            on_arc = on_arc.max(circle_equations(&q, u));
            samples += 1;
        }
    }
    let mut out = OracleResult::new("unit-circle", worst, samples, tol);
    out.metrics.insert("sigma_max".into(), sigma_max);
    out.metrics.insert("on_arc".into(), on_arc);
    Ok(out)
}

/// `max(|F1|, |F2|)` at `p = (z, zeta u)`.
pub fn circle_equations(p: &AmbientPoint, u: &[f64]) -> f64 {
    let n = u.len();
    let z = p.z[0];
    let zeta: Complex64 = p.z[1..].iter().zip(u).map(|(a, b)| a * *b).sum();
    let f1 = zeta.norm_sqr() - n as f64 * (z.norm_sqr() - 1.0);
    let f2 = (z * zeta.powu(n as u32)).re;
    f1.abs().max(f2.abs())
}

/// Random `P_psi` are special Lagrangian, and every real line in `C` lies
/// in exactly `n` of them with pairwise transverse `C^n` projections.
pub fn plane_oracle(n: usize, trials: usize, seed: u64, tol: f64) -> Result<OracleResult> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0_f64;
    let mut found_min = usize::MAX;
    let mut found_max = 0;
    let mut min_sv = f64::INFINITY;
    for trial in 0..trials {
        let psi = if trial == 0 { 0.0 } else { rng.random_range(0.0..PI) };
        let plane = PlaneP::new(psi, n);
        // The parametrization is linear, so the images of the unit vectors
        // are the exact tangent frame.
        let frame: Vec<Vec<Complex64>> = (0..=n)
            .map(|i| plane.point(&(0..=n).map(|k| if k == i { 1.0 } else { 0.0 }).collect::<Vec<_>>()))
            .collect();
        let res = frame_residual(&frame)?;
        worst = worst.max(res.omega_res).max(res.upsilon_res);

        let gamma = rng.random_range(0.0..PI);
        let mut line = vec![Complex64::new(0.0, 0.0); n + 1];
        line[0] = Complex64::from_polar(1.0, gamma);
        let planes: Vec<PlaneP> = lines_planes(gamma, n).into_iter().map(|p| PlaneP::new(p, n)).collect();
        found_min = found_min.min(planes.len());
        found_max = found_max.max(planes.len());
        for p in &planes {
            worst = worst.max(p.equations(&line).iter().fold(0.0_f64, |a, e| a.max(e.abs())));
        }
        for a in 0..planes.len() {
            for b in a + 1..planes.len() {
                let m = nalgebra::DMatrix::from_fn(2 * n, 2 * n, |r, c| {
                    if c < n {
                        planes[a].fibre_projection()[(r, c)]
                    } else {
                        planes[b].fibre_projection()[(r, c - n)]
                    }
                });
                let sv = m.singular_values().min();
                min_sv = min_sv.min(sv);
            }
        }
    }
    let mut out = OracleResult::new("planes", worst, trials, tol);
    out.pass &= found_min == n && found_max == n && min_sv > 1e-8;
    out.metrics.insert("planes_found_min".into(), found_min as f64);
    out.metrics.insert("planes_found_max".into(), found_max as f64);
    out.metrics.insert("min_projection_singular_value".into(), min_sv);
    Ok(out)
}

/// Sampling box for [`branch_separation`].
#[derive(Clone, Copy, Debug)]
pub struct SeparationOptions {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub t_half_width: f64,
    pub samples: usize,
}

impl Default for SeparationOptions {
    fn default() -> Self {
        Self { sigma_min: 0.01, sigma_max: 0.05, t_half_width: 0.05, samples: 9 }
    }
}

/// Distinct branches at one centre meet only along the arc.
///
/// For each pair `j < k`, `d(sigma)` is the smallest distance over `t` from
/// branch-`j` points to the branch-`k` sheet (with `u = e1`). The reported
/// bound is `c = min d(sigma)/sigma`; the flat law is `|sin((k - j) pi/n)|`.
/// `max_residual` is the largest gap between branches at `sigma = 0`.
pub fn branch_separation(arc: &ArcSpec, n: usize, order: usize, opts: &SeparationOptions, tol: f64) -> Result<OracleResult> {
    if arc.closed {
        if let Gate::Obstruction { shift } = existence_gate(arc, n)? {
            return Err(Error::Obstruction { shift, n });
        }
    }
    let s0 = 0.5 * (arc.domain.0 + arc.domain.1);
    let na = normalize_at(arc, s0, n)?;
    let charts = (0..n).map(|j| Chart::from_normalized::<TwoFloat>(&na, j, order)).collect::<Result<Vec<_>>>()?;
    let u: Vec<f64> = (0..n).map(|k| if k == 0 { 1.0 } else { 0.0 }).collect();
    let m = opts.samples.max(2);
    let ts: Vec<f64> = (0..m).map(|i| -opts.t_half_width + 2.0 * opts.t_half_width * i as f64 / (m - 1) as f64).collect();
    let sigmas: Vec<f64> = (0..m).map(|i| opts.sigma_min + (opts.sigma_max - opts.sigma_min) * i as f64 / (m - 1) as f64).collect();
    let mut out_metrics = BTreeMap::new();
    let mut c_min = f64::INFINITY;
    let mut coincidence = 0.0_f64;
    let mut samples = 0;
    for j in 0..n {
        for k in j + 1..n {
            let mut ratio = f64::INFINITY;
            let (mut num, mut den) = (0.0, 0.0);
            for &s in &sigmas {
                let mut d = f64::INFINITY;
                for &t in &ts {
                    let p = chart_point(&charts[j], t, s, &u)?;
                    d = d.min(sheet_distance(&charts[k], &p)?);
                    samples += 1;
                }
                ratio = ratio.min(d / s);
                num += d * s;
                den += s * s;
            }
            for &t in &ts {
                let a = chart_point(&charts[j], t, 0.0, &u)?;
                let b = chart_point(&charts[k], t, 0.0, &u)?;
                coincidence = coincidence.max(a.distance(&b));
            }
            c_min = c_min.min(ratio);
            out_metrics.insert(format!("c_{j}_{k}"), ratio);
            out_metrics.insert(format!("fit_{j}_{k}"), num / den);
        }
    }
    let mut out = OracleResult::new("branches", coincidence, samples, tol);
    out.pass &= c_min > 0.0;
    out.metrics = out_metrics;
    out.metrics.insert("c_min".into(), c_min);
    out.metrics.insert("coincidence".into(), coincidence);
    Ok(out)
}
