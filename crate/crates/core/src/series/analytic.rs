//! Composition with the analytic kernels arctan and tan.
//!
//! Both are computed from their defining ODEs, which avoids ever expanding
//! the kernel itself: `y = atan(x)` solves `y' = x'/(1 + x^2)` and
//! `y = tan(x)` solves `y' = (1 + y^2) x'`, each with `y(0) = 0`.

use super::real::Real;
use super::taylor::TaylorPoly;
use crate::error::{Error, Result};

/// Outer function for [`analytic_compose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kernel {
    Arctan,
    Tan,
}

/// `kernel(inner(t))` as a series, for `inner(0) = 0`.
pub fn analytic_compose<T: Real>(kernel: Kernel, inner: &TaylorPoly<T>) -> Result<TaylorPoly<T>> {
    let x0 = inner.coeff(0);
    if !x0.is_zero() {
        return Err(Error::CompositionDomain(x0.as_f64()));
    }
    let cap = inner.degree_cap();
    if cap == 0 {
        return Ok(TaylorPoly::zero(0));
    }
    Ok(match kernel {
        Kernel::Arctan => {
            let dx = inner.derivative();
            let x = inner.with_cap(cap - 1);
            let denom = (&x * &x).add_constant(T::one());
            (&dx * &denom.reciprocal()?).antiderivative()
        }
        Kernel::Tan => tan_series(inner),
    })
}

fn tan_series<T: Real>(inner: &TaylorPoly<T>) -> TaylorPoly<T> {
    let cap = inner.degree_cap();
    let dx: Vec<T> = inner.derivative().coeffs().to_vec();
    let mut y = vec![T::zero(); cap + 1];
    // c = 1 + y^2, filled in lock step with y.
    let mut c = vec![T::zero(); cap];
    for m in 0..cap {
        let mut sq = T::zero();
        for i in 0..=m {
            sq += y[i] * y[m - i];
        }
        c[m] = if m == 0 { T::one() + sq } else { sq };
        let mut acc = T::zero();
        for i in 0..=m {
            acc += c[i] * dx[m - i];
        }
        y[m + 1] = acc.quot(T::from_usize(m + 1));
    }
    TaylorPoly::from_coeffs(y, cap)
}
