//! Numerical check of the hypotheses of the singular Cauchy–Kovalevskaya
//! theorem for the substituted equation `G(t, sigma, Z) = 0`.
//!
//! With `phi = f0 + f1 sigma^2/2 + u sigma^2` and
//! `Z = (Z00, Z01, Z10, Z02, Z11, Z20)` standing for
//! `(u, u_t, sigma u_sigma, u_tt, sigma u_{sigma t}, sigma^2 u_{sigma sigma})`,
//! the equation becomes
//!
//! ```text
//! G = Im{(1 + i(f1 + 2 Z00 + Z10))^(n-1) [sigma^2 (f1' + 2 Z01 + Z11)^2
//!       + (1 + i(f0'' + (f1'' + Z02) sigma^2 / 2))(1 + i(f1 + 2 Z00 + 4 Z10 + Z20))]}
//! ```

use serde::{Deserialize, Serialize};

use super::stage::compute_f1;
use crate::error::Result;
use crate::series::TaylorPoly;

/// Order of the `Z` slots.
pub const Z_LABELS: [&str; 6] = ["Z00", "Z01", "Z10", "Z02", "Z11", "Z20"];

/// Step sweep for the central differences.
pub const FD_STEPS: [f64; 3] = [1e-4, 1e-5, 1e-6];

#[derive(Clone, Copy, Debug)]
struct Jet {
    f0pp: f64,
    f1: f64,
    f1p: f64,
    f1pp: f64,
}

fn g_value(n: usize, jet: &Jet, sigma: f64, z: &[f64; 6]) -> f64 {
    let [z00, z01, z10, z02, z11, z20] = *z;
    let s2 = sigma * sigma;
    let a = num_complex::Complex64::new(1.0, jet.f1 + 2.0 * z00 + z10);
    let grad = jet.f1p + 2.0 * z01 + z11;
    let tt = num_complex::Complex64::new(1.0, jet.f0pp + 0.5 * (jet.f1pp + z02) * s2);
    let ss = num_complex::Complex64::new(1.0, jet.f1 + 2.0 * z00 + 4.0 * z10 + z20);
    (a.powu(n as u32 - 1) * (s2 * grad * grad + tt * ss)).im
}

/// Central difference in slot `slot`, Richardson-extrapolated over the step
/// sweep. Returns the estimate at the finest step and the spread across
/// steps.
fn partial(n: usize, jet: &Jet, sigma: f64, slot: usize) -> (f64, f64) {
    let d = |h: f64| {
        let mut zp = [0.0; 6];
        let mut zm = [0.0; 6];
        zp[slot] = h;
        zm[slot] = -h;
        (g_value(n, jet, sigma, &zp) - g_value(n, jet, sigma, &zm)) / (2.0 * h)
    };
    let raw: Vec<f64> = FD_STEPS.iter().map(|&h| d(h)).collect();
    let rich: Vec<f64> = raw.windows(2).map(|w| (100.0 * w[1] - w[0]) / 99.0).collect();
    let best = rich[0];
    let spread = rich.iter().map(|r| (r - best).abs()).fold(0.0, f64::max);
    (best, spread)
}

/// Result of [`gt_hypotheses_check`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GtReport {
    pub n: usize,
    /// `max |G(t, 0, 0)|` on the `t` grid.
    pub g_at_zero: f64,
    /// `max |dG/dZ|` over `Z01, Z11, Z02` at `sigma = 0` on the `t` grid.
    pub degenerate_partials: f64,
    /// `(dG/dZ20, dG/dZ10, dG/dZ00)` at the origin.
    pub triple: [f64; 3],
    /// `(1, n + 3, 2n)`.
    pub expected_triple: [f64; 3],
    pub triple_error: f64,
    /// `min_{1 <= k <= k_max} |P20 k^2 + P10 k + P00|`.
    pub indicial_min: f64,
    pub k_max: usize,
    /// Largest disagreement between step sizes.
    pub fd_spread: f64,
    pub t_grid: Vec<f64>,
    pub pass: [bool; 4],
}

/// Options for [`gt_hypotheses_check`].
#[derive(Clone, Copy, Debug)]
pub struct GtOptions {
    pub t_max: f64,
    pub t_samples: usize,
    pub k_max: usize,
    pub tol_zero: f64,
    pub tol_triple: f64,
}

impl Default for GtOptions {
    fn default() -> Self {
        Self { t_max: 0.1, t_samples: 21, k_max: 1000, tol_zero: 1e-9, tol_triple: 1e-7 }
    }
}

/// Evaluates the four hypotheses numerically along `t` near the origin.
pub fn gt_hypotheses_check(f0: &TaylorPoly<f64>, n: usize, opts: &GtOptions) -> Result<GtReport> {
    let f1 = compute_f1(f0, n)?;
    let f0pp = f0.derivative().derivative();
    let f1p = f1.derivative();
    let f1pp = f1p.derivative();
    let jet_at = |t: f64| Jet { f0pp: f0pp.eval(t), f1: f1.eval(t), f1p: f1p.eval(t), f1pp: f1pp.eval(t) };
    let t_grid = super::residual::linspace(-opts.t_max, opts.t_max, opts.t_samples);

    let mut g_at_zero = 0.0_f64;
    let mut degenerate = 0.0_f64;
    let mut spread = 0.0_f64;
    for &t in &t_grid {
        let jet = jet_at(t);
        g_at_zero = g_at_zero.max(g_value(n, &jet, 0.0, &[0.0; 6]).abs());
        for slot in [1, 4, 3] {
            let (d, s) = partial(n, &jet, 0.0, slot);
            degenerate = degenerate.max(d.abs());
            spread = spread.max(s);
        }
    }

    let origin = jet_at(0.0);
    let mut triple = [0.0; 3];
    for (i, slot) in [5, 2, 0].into_iter().enumerate() {
        let (d, s) = partial(n, &origin, 0.0, slot);
        triple[i] = d;
        spread = spread.max(s);
    }
    let nf = n as f64;
    let expected_triple = [1.0, nf + 3.0, 2.0 * nf];
    let triple_error = triple.iter().zip(expected_triple).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let indicial_min = (1..=opts.k_max)
        .map(|k| {
            let k = k as f64;
            (triple[0] * k * k + triple[1] * k + triple[2]).abs()
        })
        .fold(f64::INFINITY, f64::min);

    let pass = [
        g_at_zero <= opts.tol_zero,
        degenerate <= opts.tol_zero,
        triple_error <= opts.tol_triple,
        indicial_min > 0.0,
    ];
    Ok(GtReport {
        n,
        g_at_zero,
        degenerate_partials: degenerate,
        triple,
        expected_triple,
        triple_error,
        indicial_min,
        k_max: opts.k_max,
        fd_spread: spread,
        t_grid,
        pass,
    })
}
