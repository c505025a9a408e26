//! `slag`: build and check invariant special Lagrangian extensions of arcs.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use slag_core::io::{Precision, RunConfig, PRECISION_ENV};

#[derive(Parser, Debug)]
#[command(name = "slag", version, about = "Series extensions of real-analytic arcs to SO(n)-invariant special Lagrangians")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Dimension parameter `n` (the extension lives in C^{n+1}).
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Truncation order in sigma^2.
    #[arg(long = "K", global = true, default_value_t = 8)]
    k: usize,
    /// Degree cap in t; at least 2K.
    #[arg(long = "D", global = true)]
    d: Option<usize>,
    #[arg(long, global = true, default_value_t = 0.05)]
    sigma_max: f64,
    #[arg(long, global = true, default_value_t = 0)]
    branch: usize,
    /// Distance between atlas centres in the arc parameter.
    #[arg(long, global = true, default_value_t = std::f64::consts::PI / 6.0)]
    spacing: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Overrides the default tolerance of every check.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Report destination; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, env = PRECISION_ENV, default_value = "double")]
    precision: String,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Normalize an arc at a point and extend it to a chart.
    Extend {
        #[arg(long)]
        arc: PathBuf,
        /// Arc parameter of the chart centre; the middle of the domain by default.
        #[arg(long)]
        at: Option<f64>,
        /// Where to write the chart document.
        #[arg(long)]
        charts: Option<PathBuf>,
    },
    /// PDE, omega, Upsilon and momentum residuals of stored charts.
    Residual {
        #[arg(long)]
        charts: PathBuf,
        /// Grid points per axis.
        #[arg(long, default_value_t = 11)]
        grid: usize,
        /// Sphere directions per grid point.
        #[arg(long, default_value_t = 4)]
        directions: usize,
        /// Finite-difference step.
        #[arg(long, default_value_t = 1e-5)]
        h: f64,
    },
    /// Numerical check of the hypotheses of the singular Cauchy problem.
    GtCheck {
        #[arg(long)]
        arc: PathBuf,
        #[arg(long)]
        at: Option<f64>,
    },
    /// Closed-form ground truths.
    Oracle {
        #[command(subcommand)]
        which: OracleKind,
    },
    /// Charts covering an arc, with overlap agreement.
    Atlas {
        #[arg(long)]
        arc: PathBuf,
        #[arg(long)]
        charts: Option<PathBuf>,
        /// Samples per axis when comparing neighbouring charts.
        #[arg(long, default_value_t = 9)]
        samples: usize,
    },
    /// Export stored charts as an OBJ mesh or a CSV point cloud.
    Mesh {
        #[arg(long)]
        charts: PathBuf,
        #[arg(long, value_enum, default_value_t = MeshKind::Reduced)]
        mode: MeshKind,
        #[arg(long)]
        mesh: PathBuf,
        #[arg(long, default_value_t = 21)]
        nt: usize,
        #[arg(long, default_value_t = 11)]
        nsigma: usize,
        /// Sphere directions (embedded mode).
        #[arg(long, default_value_t = 8)]
        nu: usize,
        #[arg(long, default_value_t = 0.1)]
        t_half_width: f64,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum OracleKind {
    /// Cones `Im(zeta^m) = c` in C^m.
    HarveyLawson {
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        c: f64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Extension of the unit circle against its implicit equations.
    Circle {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0.0)]
        at: f64,
    },
    /// Invariant special Lagrangian planes.
    Planes {
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Separation of the n branches over an open arc.
    Branches {
        #[arg(long)]
        arc: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum MeshKind {
    Reduced,
    Embedded,
}

impl GlobalArgs {
    fn config(&self) -> anyhow::Result<RunConfig> {
        let cfg = RunConfig {
            n: self.n,
            order: self.k,
            degree_cap: self.d.unwrap_or(2 * self.k + 4),
            sigma_max: self.sigma_max,
            spacing: self.spacing,
            branch: self.branch,
            seed: self.seed,
            precision: Precision::parse(&self.precision)?,
            tolerance: self.tol,
            out: self.out.clone(),
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let run = || -> anyhow::Result<bool> {
        let cfg = cli.global.config()?;
        let report = commands::run(&cfg, &cli.command)?;
        let text = report.to_json();
        match &cfg.out {
            Some(path) => report.write(path)?,
            None => println!("{text}"),
        }
        Ok(report.passed())
    };
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
