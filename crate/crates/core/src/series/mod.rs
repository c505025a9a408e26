//! Truncated power-series arithmetic.

mod analytic;
mod complex;
mod real;
mod sigma;
mod taylor;

pub use analytic::{analytic_compose, Kernel};
pub use complex::ComplexSeries;
pub use real::{factorials, Real};
pub use sigma::{Partials, SigmaExpansion};
pub use taylor::TaylorPoly;
pub use twofloat::TwoFloat;
