//! Maps into `C^{n+1}` and the special Lagrangian verification layer.

mod j0;
mod lift;
mod plane;
mod slag;
mod sphere;

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub use j0::{
    c_map_pullback, eta_covectors, f_map_pullback, in_coframe_span, j0_coframe, Covector, FMap,
};
pub use lift::{chart_point, chart_residuals, chart_slag_residual, sheet_distance};
pub use plane::{lines_planes, PlaneP};
pub use slag::{frame_residual, slag_residual, FdScheme, SlagResidual};
pub use sphere::{sphere_chart, sphere_samples, tangent_basis};

/// Tolerance on `|u| = 1`.
pub const UNIT_TOL: f64 = 1e-12;

/// A point `(z0, z1, ..., zn)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbientPoint {
    pub z: Vec<Complex64>,
}

impl AmbientPoint {
    pub fn new(z: Vec<Complex64>) -> Self {
        Self { z }
    }

    /// Number of coordinates, `n + 1`.
    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    /// Euclidean distance in `C^{n+1}`.
    pub fn distance(&self, other: &Self) -> f64 {
        self.z.iter().zip(&other.z).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
    }

    /// Real coordinates `x0, y0, x1, y1, ...`.
    pub fn to_real(&self) -> Vec<f64> {
        self.z.iter().flat_map(|c| [c.re, c.im]).collect()
    }
}

pub(crate) fn check_unit(u: &[f64]) -> Result<()> {
    let norm = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NonUnit(norm));
    }
    Ok(())
}

/// The cone parametrization `(w, zeta, u) -> (w, zeta u1, ..., zeta un)`.
pub fn phi_map(w: Complex64, zeta: Complex64, u: &[f64]) -> Result<AmbientPoint> {
    check_unit(u)?;
    let mut z = Vec::with_capacity(u.len() + 1);
    z.push(w);
    z.extend(u.iter().map(|&uk| zeta * uk));
    Ok(AmbientPoint::new(z))
}

/// `lambda^j` with `lambda = e^{i pi / n}`; `j` is reduced mod `2n` first so
/// that `j` and `j + 2n` give bit-identical results.
pub fn lambda_power(j: i64, n: usize) -> Complex64 {
    let jj = j.rem_euclid(2 * n as i64);
    Complex64::from_polar(1.0, jj as f64 * PI / n as f64)
}

/// `(z0, lambda^j z1, ..., lambda^j zn)`.
pub fn lambda_star(p: &AmbientPoint, j: i64, n: usize) -> AmbientPoint {
    let l = lambda_power(j, n);
    let mut z = p.z.clone();
    for zk in z.iter_mut().skip(1) {
        *zk *= l;
    }
    AmbientPoint::new(z)
}

/// `Phi_{a, theta}: (z0, z') -> (e^{i n theta} z0 + a, e^{-i theta} z')`.
pub fn group_motion(p: &AmbientPoint, a: Complex64, theta: f64, n: usize) -> AmbientPoint {
    let rot0 = Complex64::from_polar(1.0, n as f64 * theta);
    let rot = Complex64::from_polar(1.0, -theta);
    let mut z = Vec::with_capacity(p.len());
    z.push(rot0 * p.z[0] + a);
    z.extend(p.z[1..].iter().map(|&zk| rot * zk));
    AmbientPoint::new(z)
}

/// Inverse of [`group_motion`].
pub fn group_motion_inverse(p: &AmbientPoint, a: Complex64, theta: f64, n: usize) -> AmbientPoint {
    let rot0 = Complex64::from_polar(1.0, -(n as f64) * theta);
    let rot = Complex64::from_polar(1.0, theta);
    let mut z = Vec::with_capacity(p.len());
    z.push(rot0 * (p.z[0] - a));
    z.extend(p.z[1..].iter().map(|&zk| rot * zk));
    AmbientPoint::new(z)
}

/// Parameters of `Phi_{a, theta} o Phi_{b, rho}`.
pub fn compose_motions(a: Complex64, theta: f64, b: Complex64, rho: f64, n: usize) -> (Complex64, f64) {
    (a + Complex64::from_polar(1.0, n as f64 * theta) * b, theta + rho)
}

/// `mu_ij = x_i y_j - y_i x_j` for `1 <= i, j <= n`.
pub fn momentum_so_n(p: &AmbientPoint) -> DMatrix<f64> {
    let n = p.len() - 1;
    DMatrix::from_fn(n, n, |i, j| {
        let (a, b) = (p.z[i + 1], p.z[j + 1]);
        a.re * b.im - a.im * b.re
    })
}
