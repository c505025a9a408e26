//! Fixtures shared by the criterion benches.

use slag_core::{Real, TaylorPoly};

/// `t^3 / 6` at degree cap `cap`: the normalized parabola potential.
pub fn parabola<T: Real>(cap: usize) -> TaylorPoly<T> {
    TaylorPoly::from_f64_coeffs(&[0.0, 0.0, 0.0, 1.0 / 6.0], cap)
}
