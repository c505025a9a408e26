//! Even expansions `phi(t, sigma) = sum_k f_k(t) sigma^(2k) / (2k)!`.

use super::real::{factorials, Real};
use super::taylor::TaylorPoly;
use crate::error::{Error, Result};

/// A truncated even expansion in `sigma` with coefficients in `t`.
///
/// All terms share one storage cap `D`. Term `k` is only meaningful up to
/// degree `D - 2k` (see [`SigmaExpansion::valid_cap`]); stored coefficients
/// above that are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaExpansion<T = f64> {
    n: usize,
    terms: Vec<TaylorPoly<T>>,
}

/// Value and partial derivatives of `phi` at one point.
///
/// The `_over_sigma` fields are the even quotients `phi_sigma / sigma` and
/// `phi_sigma_t / sigma`, which stay regular at `sigma = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Partials<T = f64> {
    pub phi: T,
    pub phi_t: T,
    pub phi_tt: T,
    pub phi_s: T,
    pub phi_ss: T,
    pub phi_st: T,
    pub phi_s_over_sigma: T,
    pub phi_st_over_sigma: T,
}

impl<T: Real> SigmaExpansion<T> {
    /// Terms must share a cap; `n` is the ambient rank parameter.
    pub fn new(n: usize, terms: Vec<TaylorPoly<T>>) -> Result<Self> {
        let Some(first) = terms.first() else {
            return Err(Error::InvalidArgument("expansion needs at least f0".into()));
        };
        let cap = first.degree_cap();
        if let Some(bad) = terms.iter().find(|p| p.degree_cap() != cap) {
            return Err(Error::Shape { left: cap, right: bad.degree_cap() });
        }
        Ok(Self { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Highest `k` present.
    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn degree_cap(&self) -> usize {
        self.terms[0].degree_cap()
    }

    pub fn terms(&self) -> &[TaylorPoly<T>] {
        &self.terms
    }

    pub fn term(&self, k: usize) -> &TaylorPoly<T> {
        &self.terms[k]
    }

    /// Degree up to which `f_k` is exact.
    pub fn valid_cap(&self, k: usize) -> usize {
        self.degree_cap().saturating_sub(2 * k)
    }

    pub fn cast<U: Real>(&self) -> SigmaExpansion<U> {
        SigmaExpansion { n: self.n, terms: self.terms.iter().map(|p| p.cast()).collect() }
    }

    /// Keeps `f_0..=f_k`.
    pub fn truncated(&self, k: usize) -> Self {
        Self { n: self.n, terms: self.terms[..=k.min(self.order())].to_vec() }
    }

    pub fn eval(&self, t: T, sigma: T) -> T {
        self.eval_with_partials(t, sigma).phi
    }

    pub fn eval_with_partials(&self, t: T, sigma: T) -> Partials<T> {
        let kmax = self.order();
        let fact: Vec<T> = factorials(2 * kmax + 1);
        let s2 = sigma * sigma;
        let zero = T::zero();
        let mut out = Partials {
            phi: zero,
            phi_t: zero,
            phi_tt: zero,
            phi_s: zero,
            phi_ss: zero,
            phi_st: zero,
            phi_s_over_sigma: zero,
            phi_st_over_sigma: zero,
        };
        // pw = sigma^(2k); pw_prev = sigma^(2k-2)
        let mut pw = T::one();
        let mut pw_prev = T::zero();
        for (k, f) in self.terms.iter().enumerate() {
            let [v, d1, d2] = f.eval_jet2(t);
            let w = pw.quot(fact[2 * k]);
            out.phi += v * w;
            out.phi_t += d1 * w;
            out.phi_tt += d2 * w;
            if k >= 1 {
                out.phi_s_over_sigma += (v * pw_prev).quot(fact[2 * k - 1]);
                out.phi_st_over_sigma += (d1 * pw_prev).quot(fact[2 * k - 1]);
                out.phi_ss += (v * pw_prev).quot(fact[2 * k - 2]);
            }
            pw_prev = pw;
            pw *= s2;
        }
        out.phi_s = out.phi_s_over_sigma * sigma;
        out.phi_st = out.phi_st_over_sigma * sigma;
        out
    }
}
