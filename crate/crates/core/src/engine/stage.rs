//! The first coefficient `f1` and the real multiplier `R`.

use crate::error::{Error, Result};
use crate::series::{analytic_compose, ComplexSeries, Kernel, Real, TaylorPoly};

/// Tolerance for the normalization `f0(0) = f0'(0) = f0''(0) = 0`.
pub const NORMALIZATION_TOL: f64 = 1e-12;

/// Rejects `f0` unless it vanishes to second order at the origin.
pub fn check_normalized<T: Real>(f0: &TaylorPoly<T>) -> Result<()> {
    if f0.degree_cap() < 2 {
        return Err(Error::Truncation(format!(
            "f0 needs degree cap >= 2, has {}",
            f0.degree_cap()
        )));
    }
    for d in 0..3 {
        let c = f0.coeff(d).as_f64();
        if !c.is_finite() || c.abs() > NORMALIZATION_TOL {
            return Err(Error::Normalization(format!("f0 coefficient of t^{d} is {c:e}")));
        }
    }
    Ok(())
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    Ok(())
}

/// `f0''` with the (already negligible) constant term forced to zero.
pub(crate) fn second_derivative<T: Real>(f0: &TaylorPoly<T>) -> TaylorPoly<T> {
    let mut x = f0.derivative().derivative();
    x.coeffs_mut()[0] = T::zero();
    x
}

/// `f1 = -tan(arctan(f0'') / n)`, with cap `D - 2`.
pub fn compute_f1<T: Real>(f0: &TaylorPoly<T>, n: usize) -> Result<TaylorPoly<T>> {
    check_rank(n)?;
    check_normalized(f0)?;
    let x = second_derivative(f0);
    let angle = analytic_compose(Kernel::Arctan, &x)?.scale(T::from_usize(n).recip_exact());
    Ok(-analytic_compose(Kernel::Tan, &angle)?)
}

/// `(1 + i f1)^n (1 + i f0'')` as a complex series; its imaginary part
/// vanishes exactly when `f1` is correct.
pub fn r_series<T: Real>(f0: &TaylorPoly<T>, f1: &TaylorPoly<T>, n: usize) -> Result<ComplexSeries<T>> {
    check_rank(n)?;
    let x = second_derivative(f0);
    if x.degree_cap() != f1.degree_cap() {
        return Err(Error::Shape { left: x.degree_cap(), right: f1.degree_cap() });
    }
    Ok(ComplexSeries::one_plus_i(f1).powi(n).mul(&ComplexSeries::one_plus_i(&x)))
}

/// The real series `R = (1 + i f1)^n (1 + i f0'')`, with `R(0) = 1`.
pub fn compute_r<T: Real>(f0: &TaylorPoly<T>, f1: &TaylorPoly<T>, n: usize) -> Result<TaylorPoly<T>> {
    Ok(r_series(f0, f1, n)?.re)
}
