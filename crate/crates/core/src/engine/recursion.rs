//! The order-by-order recursion producing `f_2, f_3, ...`.
//!
//! Writing `s = sigma^2`, every ingredient of the even form of the PDE
//!
//! ```text
//! Im[(1 + i phi_s/sigma)^(n-1) ((1 + i phi_tt)(1 + i phi_ss) + phi_st^2)] = 0
//! ```
//!
//! is a power series in `s` whose coefficients are complex series in `t`.
//! Setting `f_{k+1} = 0` and extracting the coefficient of `s^k` gives a
//! residual `E_k` that is affine in `f_{k+1}` with slope
//! `R/(1 + f1^2) * (2k + n)/(2k + 1)!`; solving for the root yields the next
//! coefficient.
//!
//! Because `f_{k+1}` involves `f_k''`, the valid `t`-degree drops by two per
//! order, so stage `k` works at cap `D - 2(k + 1)`.

use super::stage::{check_normalized, check_rank, compute_f1, compute_r};
use crate::error::{Error, Result};
use crate::series::{factorials, ComplexSeries, Real, SigmaExpansion, TaylorPoly};

/// Power series in `s` with complex `t`-series coefficients, truncated at `s^k`.
struct Graded<T: Real>(Vec<ComplexSeries<T>>);

impl<T: Real> Graded<T> {
    fn mul(&self, other: &Self) -> Self {
        let k = self.0.len() - 1;
        let cap = self.0[0].degree_cap();
        let mut out = vec![ComplexSeries::zero(cap); k + 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0[..=k - i].iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Graded(out)
    }

    fn powi(&self, m: usize) -> Self {
        let cap = self.0[0].degree_cap();
        let k = self.0.len() - 1;
        let mut unit = vec![ComplexSeries::zero(cap); k + 1];
        unit[0] = ComplexSeries::one(cap);
        let mut result = Graded(unit);
        let mut base = Graded(self.0.clone());
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Coefficient of `s^k` in `self * other`.
    fn product_coeff(&self, other: &Self, k: usize) -> ComplexSeries<T> {
        let cap = self.0[0].degree_cap();
        let mut acc = ComplexSeries::zero(cap);
        for i in 0..=k {
            acc = acc.add(&self.0[i].mul(&other.0[k - i]));
        }
        acc
    }
}

/// Imaginary part of the `s^k` coefficient of the PDE left side, built from
/// the given terms (missing terms are zero), at `t`-cap `cap`.
pub(crate) fn sigma_coefficient<T: Real>(
    terms: &[TaylorPoly<T>],
    n: usize,
    k: usize,
    cap: usize,
) -> TaylorPoly<T> {
    let fact: Vec<T> = factorials(2 * k + 2);
    let zero = TaylorPoly::zero(cap);
    let f = |j: usize| -> TaylorPoly<T> {
        terms.get(j).map(|p| p.with_cap(cap + 2)).unwrap_or_else(|| TaylorPoly::zero(cap + 2))
    };
    let at = |p: TaylorPoly<T>| p.with_cap(cap);

    // phi_s/sigma -> A, phi_tt -> B, phi_ss -> C, phi_st/sigma -> S.
    let mut a = Vec::with_capacity(k + 1);
    let mut b = Vec::with_capacity(k + 1);
    let mut c = Vec::with_capacity(k + 1);
    let mut s = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let next = f(j + 1);
        let inv_odd = fact[2 * j + 1].recip_exact();
        let inv_even = fact[2 * j].recip_exact();
        a.push(at(next.scale(inv_odd)));
        c.push(at(next.scale(inv_even)));
        s.push(at(next.derivative().scale(inv_odd)));
        b.push(f(j).derivative().derivative().scale(inv_even));
    }
    let one_plus_i = |xs: &[TaylorPoly<T>]| -> Graded<T> {
        Graded(
            xs.iter()
                .enumerate()
                .map(|(j, x)| {
                    let mut z = ComplexSeries::new(zero.clone(), x.clone());
                    if j == 0 {
                        z.re = TaylorPoly::one(cap);
                    }
                    z
                })
                .collect(),
        )
    };
    let prefactor = one_plus_i(&a).powi(n - 1);
    let mut bracket = one_plus_i(&b).mul(&one_plus_i(&c));
    // s * (phi_st/sigma)^2 shifts the real square up one order.
    let real = |xs: &[TaylorPoly<T>]| Graded(xs.iter().cloned().map(ComplexSeries::from_real).collect());
    let sq = real(&s).mul(&real(&s));
    for j in 1..=k {
        bracket.0[j] = bracket.0[j].add(&sq.0[j - 1]);
    }
    prefactor.product_coeff(&bracket, k).im
}

/// `(1 + f1^2) / R` at cap `D - 2`.
fn solve_gain<T: Real>(f0: &TaylorPoly<T>, f1: &TaylorPoly<T>, n: usize) -> Result<TaylorPoly<T>> {
    let r = compute_r(f0, f1, n)?;
    Ok(&(f1 * f1).add_constant(T::one()) * &r.reciprocal()?)
}

fn stage_cap(d: usize, k: usize) -> Result<usize> {
    d.checked_sub(2 * (k + 1)).ok_or_else(|| {
        Error::Truncation(format!("order {} needs degree cap >= {}, have {d}", k + 1, 2 * (k + 1)))
    })
}

/// Builds `f_0..=f_K` for `K = order`.
///
/// The input cap `D` must satisfy `D >= 2K`. Term `f_k` is exact to degree
/// `D - 2k` and zero-padded above it.
pub fn extend_series<T: Real>(f0: &TaylorPoly<T>, n: usize, order: usize) -> Result<SigmaExpansion<T>> {
    check_rank(n)?;
    check_normalized(f0)?;
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let d = f0.degree_cap();
    if 2 * order > d {
        return Err(Error::Truncation(format!("order {order} needs degree cap >= {}, have {d}", 2 * order)));
    }
    let f1 = compute_f1(f0, n)?;
    let gain = solve_gain(f0, &f1, n)?;
    let fact: Vec<T> = factorials(2 * order);
    let mut terms = vec![f0.clone(), f1];
    for k in 1..order {
        let cap = stage_cap(d, k)?;
        let e = sigma_coefficient(&terms, n, k, cap);
        let factor = fact[2 * k + 1].quot(T::from_usize(2 * k + n));
        let next = -(&e * &gain.with_cap(cap)).scale(factor);
        if next.coeffs().iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite(format!("coefficient f_{}", k + 1)));
        }
        terms.push(next);
    }
    let terms = terms.into_iter().map(|p| p.with_cap(d)).collect();
    SigmaExpansion::new(n, terms)
}

/// Outcome of [`linearity_probe`].
#[derive(Clone, Debug)]
pub struct LinearityProbe<T = f64> {
    /// `(E_k(f_{k+1} = delta) - E_k(f_{k+1} = 0)) / delta`.
    pub measured: TaylorPoly<T>,
    /// `R/(1 + f1^2) * (2k + n)/(2k + 1)!`.
    pub predicted: TaylorPoly<T>,
    pub max_deviation: f64,
}

/// Perturbs `f_{k+1}` by the constant `delta` and compares the response of
/// the `sigma^(2k)` coefficient against the predicted slope.
pub fn linearity_probe<T: Real>(f0: &TaylorPoly<T>, n: usize, k: usize, delta: T) -> Result<LinearityProbe<T>> {
    if k == 0 {
        return Err(Error::InvalidArgument("probe order must be at least 1".into()));
    }
    let d = f0.degree_cap();
    let cap = stage_cap(d, k)?;
    let base = extend_series(f0, n, k)?;
    let mut terms = base.terms().to_vec();
    let e0 = sigma_coefficient(&terms, n, k, cap);
    terms.push(TaylorPoly::constant(delta, d));
    let e1 = sigma_coefficient(&terms, n, k, cap);
    let measured = (&e1 - &e0).scale(delta.recip_exact());
    let gain = solve_gain(f0, &base.term(1).with_cap(d - 2), n)?.with_cap(cap).reciprocal()?;
    let fact: Vec<T> = factorials(2 * k + 1);
    let predicted = gain.scale(T::from_usize(2 * k + n).quot(fact[2 * k + 1]));
    let max_deviation = (&measured - &predicted).max_abs();
    Ok(LinearityProbe { measured, predicted, max_deviation })
}

/// `sigma^(2k)` coefficient of the PDE left side for the given expansion,
/// at `t`-cap `D - 2(k + 1)`.
pub fn sigma_residual_coefficient<T: Real>(phi: &SigmaExpansion<T>, k: usize) -> Result<TaylorPoly<T>> {
    let cap = stage_cap(phi.degree_cap(), k)?;
    Ok(sigma_coefficient(phi.terms(), phi.n(), k, cap))
}
