//! Heuristic convergence radii from coefficient growth.

use serde::{Deserialize, Serialize};

use crate::series::{factorials, Real, SigmaExpansion, TaylorPoly};

/// Fitted envelope `||f_k|| <= C M^k` of the expansion terms, the implied
/// `sigma` radius `rho_sigma`, and a `t` radius for `f0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusEstimate {
    pub c: f64,
    pub m: f64,
    pub rho_sigma: f64,
    /// Coefficient of determination of the log-linear fit, in `[0, 1]`.
    pub fit_quality: f64,
    pub rho_t: f64,
}

impl RadiusEstimate {
    /// Marker for an expansion with no growth information (e.g. `phi = 0`).
    pub fn unbounded() -> Self {
        Self { c: 0.0, m: 0.0, rho_sigma: f64::INFINITY, fit_quality: 1.0, rho_t: f64::INFINITY }
    }
}

/// Weight applied to `t^d` in the term norm `sum_d |c_d| tau^d`.
pub const DEFAULT_TAU: f64 = 0.1;

fn weighted_norm<T: Real>(p: &TaylorPoly<T>, upto: usize, tau: f64) -> f64 {
    let mut w = 1.0;
    let mut acc = 0.0;
    for d in 0..=upto.min(p.degree_cap()) {
        acc += p.coeff(d).abs().as_f64() * w;
        w *= tau;
    }
    acc
}

/// Least squares line `y = a + b x`; returns `(a, b, r2)`.
fn fit_line(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let b = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let a = my - b * mx;
    let r2 = if syy > 0.0 { (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0) } else { 1.0 };
    (a, b, r2)
}

/// Root-test radius of a single series over its upper coefficient range.
pub fn t_radius<T: Real>(f: &TaylorPoly<T>) -> f64 {
    let cap = f.degree_cap();
    let pts: Vec<(f64, f64)> = (cap / 2..=cap)
        .filter(|&d| d >= 3)
        .filter_map(|d| {
            let c = f.coeff(d).abs().as_f64();
            (c > 0.0).then(|| (d as f64, c.ln()))
        })
        .collect();
    if pts.len() < 2 {
        return f64::INFINITY;
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
    let (_, b, _) = fit_line(&xs, &ys);
    if b >= 0.0 {
        // Non-decaying coefficients: fall back to the worst root test.
        return xs
            .iter()
            .zip(&ys)
            .map(|(d, lc)| (-lc / d).exp())
            .fold(f64::INFINITY, f64::min);
    }
    (-b).exp()
}

/// Fits the coefficient envelope of `phi` using the weighted norm with
/// weight `tau` over each term's valid degrees.
pub fn estimate_radius<T: Real>(phi: &SigmaExpansion<T>, tau: f64) -> RadiusEstimate {
    let fact: Vec<f64> = factorials::<f64>(2 * phi.order());
    let mut ks = Vec::new();
    let mut norms = Vec::new();
    for k in 1..=phi.order() {
        let v = weighted_norm(phi.term(k), phi.valid_cap(k), tau);
        if v > 0.0 && v.is_finite() {
            ks.push(k as f64);
            norms.push(v);
        }
    }
    let rho_t = t_radius(phi.term(0));
    if ks.len() < 2 {
        let c = norms.first().copied().unwrap_or(0.0);
        return RadiusEstimate { c, rho_t, ..RadiusEstimate::unbounded() };
    }
    let log_n: Vec<f64> = norms.iter().map(|v| v.ln()).collect();
    let (_, slope, _) = fit_line(&ks, &log_n);
    let m = slope.exp();
    let c = ks.iter().zip(&norms).map(|(k, v)| v / m.powf(*k)).fold(0.0, f64::max);
    let scaled: Vec<f64> = ks.iter().zip(&log_n).map(|(k, l)| l - fact[2 * *k as usize].ln()).collect();
    let (_, s2, r2) = fit_line(&ks, &scaled);
    let rho_sigma = if s2 < 0.0 { (-s2 / 2.0).exp() } else { 0.0 };
    RadiusEstimate { c, m, rho_sigma, fit_quality: r2, rho_t }
}
