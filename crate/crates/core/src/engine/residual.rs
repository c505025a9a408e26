//! Pointwise evaluation of the PDE on a sampling grid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{Partials, Real, SigmaExpansion};

/// Rectangular grid `[t_min, t_max] x [0, sigma_max]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub sigma_max: f64,
    pub nt: usize,
    pub nsigma: usize,
}

impl ResidualGrid {
    /// Square grid `[-r, r] x [0, r]` with `m` points per axis.
    pub fn square(r: f64, m: usize) -> Self {
        Self { t_min: -r, t_max: r, sigma_max: r, nt: m, nsigma: m }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.t_min.is_finite()
            && self.t_max.is_finite()
            && self.sigma_max.is_finite()
            && self.t_min <= self.t_max
            && self.sigma_max >= 0.0
            && self.nt >= 1
            && self.nsigma >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("bad residual grid {self:?}")))
        }
    }

    pub fn t_values(&self) -> Vec<f64> {
        linspace(self.t_min, self.t_max, self.nt)
    }

    pub fn sigma_values(&self) -> Vec<f64> {
        linspace(0.0, self.sigma_max, self.nsigma)
    }

    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let ts = self.t_values();
        let ss = self.sigma_values();
        ts.into_iter().flat_map(move |t| ss.clone().into_iter().map(move |s| (t, s)))
    }
}

pub(crate) fn linspace(a: f64, b: f64, m: usize) -> Vec<f64> {
    if m == 1 {
        return vec![0.5 * (a + b)];
    }
    (0..m).map(|i| a + (b - a) * i as f64 / (m - 1) as f64).collect()
}

/// Maximal residuals over a grid. The ambient entries are filled only by
/// checks that construct the immersed submanifold.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max_pde: f64,
    pub max_omega: Option<f64>,
    pub max_upsilon: Option<f64>,
    pub max_momentum: Option<f64>,
    pub samples: usize,
}

/// `Im[(sigma + i phi_s)^(n-1) ((1 + i phi_tt)(1 + i phi_ss) + phi_st^2)]`.
pub fn pde_value<T: Real>(n: usize, sigma: T, p: &Partials<T>) -> T {
    let (re, im) = bracket(p);
    let (pr, pi) = cpow(sigma, p.phi_s, n - 1);
    pr * im + pi * re
}

/// The same expression divided by `sigma^(n-1)`; regular at `sigma = 0`.
pub fn pde_value_reduced<T: Real>(n: usize, p: &Partials<T>) -> T {
    let (re, im) = bracket(p);
    let (pr, pi) = cpow(T::one(), p.phi_s_over_sigma, n - 1);
    pr * im + pi * re
}

fn bracket<T: Real>(p: &Partials<T>) -> (T, T) {
    // (1 + i a)(1 + i b) + c^2
    let re = T::one() - p.phi_tt * p.phi_ss + p.phi_st * p.phi_st;
    let im = p.phi_tt + p.phi_ss;
    (re, im)
}

fn cpow<T: Real>(re: T, im: T, m: usize) -> (T, T) {
    let (mut ar, mut ai) = (T::one(), T::zero());
    for _ in 0..m {
        let nr = ar * re - ai * im;
        ai = ar * im + ai * re;
        ar = nr;
    }
    (ar, ai)
}

/// Largest `|PDE|` of the expansion over the grid, computed in the
/// expansion's own precision.
pub fn pde_residual<T: Real>(phi: &SigmaExpansion<T>, grid: &ResidualGrid) -> Result<ResidualReport> {
    grid.validate()?;
    let n = phi.n();
    let mut max_pde = 0.0_f64;
    let mut samples = 0;
    for (t, s) in grid.points() {
        let (t, s) = (T::lift(t), T::lift(s));
        let p = phi.eval_with_partials(t, s);
        let r = pde_value(n, s, &p).abs().as_f64();
        if !r.is_finite() {
            return Err(Error::NonFinite(format!("PDE residual at t = {t:?}, sigma = {s:?}")));
        }
        max_pde = max_pde.max(r);
        samples += 1;
    }
    Ok(ResidualReport { max_pde, samples, ..Default::default() })
}

/// Largest reduced residual `|PDE| / sigma^(n-1)` over the grid.
pub fn reduced_pde_residual<T: Real>(phi: &SigmaExpansion<T>, grid: &ResidualGrid) -> Result<f64> {
    grid.validate()?;
    let mut worst = 0.0_f64;
    for (t, s) in grid.points() {
        let p = phi.eval_with_partials(T::lift(t), T::lift(s));
        worst = worst.max(pde_value_reduced(phi.n(), &p).abs().as_f64());
    }
    Ok(worst)
}
