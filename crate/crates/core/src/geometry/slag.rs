//! Pullbacks of the Kahler form and of `Im(dz_0 ^ ... ^ dz_n)` to a
//! parametrized submanifold.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::AmbientPoint;
use crate::error::{Error, Result};

/// Central-difference settings for tangent vectors.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FdScheme {
    pub h: f64,
    /// Combine steps `h` and `h/2` to cancel the `h^2` term.
    pub richardson: bool,
}

impl Default for FdScheme {
    fn default() -> Self {
        Self { h: 1e-5, richardson: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlagResidual {
    /// `max_{i<j} |omega(v_i, v_j)| / (|v_i| |v_j|)`.
    pub omega_res: f64,
    /// `|Im det[v_0 ... v_m]| / prod |v_i|`.
    pub upsilon_res: f64,
    /// `Re det / |det|`.
    pub phase: f64,
}

/// Tangent frame by central differences.
pub fn tangent_frame(
    param: &dyn Fn(&[f64]) -> Result<AmbientPoint>,
    at: &[f64],
    fd: FdScheme,
) -> Result<Vec<Vec<Complex64>>> {
    let diff = |i: usize, h: f64| -> Result<Vec<Complex64>> {
        let mut xp = at.to_vec();
        let mut xm = at.to_vec();
        xp[i] += h;
        xm[i] -= h;
        let (p, m) = (param(&xp)?, param(&xm)?);
        Ok(p.z.iter().zip(&m.z).map(|(a, b)| (a - b) / (2.0 * h)).collect())
    };
    (0..at.len())
        .map(|i| {
            let coarse = diff(i, fd.h)?;
            if !fd.richardson {
                return Ok(coarse);
            }
            let fine = diff(i, fd.h / 2.0)?;
            Ok(fine.iter().zip(&coarse).map(|(f, c)| (4.0 * f - c) / 3.0).collect())
        })
        .collect()
}

/// `omega(u, v) = sum_k Im(conj(u_k) v_k)`.
pub fn omega(u: &[Complex64], v: &[Complex64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| (a.conj() * b).im).sum()
}

/// Residuals of an explicit frame of `m` vectors in `C^m`.
pub fn frame_residual(vectors: &[Vec<Complex64>]) -> Result<SlagResidual> {
    let m = vectors.len();
    if vectors.iter().any(|v| v.len() != m) {
        return Err(Error::InvalidArgument(format!("frame of {m} vectors must live in C^{m}")));
    }
    let norms: Vec<f64> = vectors.iter().map(|v| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()).collect();
    if norms.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::Degenerate);
    }
    let mut omega_res = 0.0_f64;
    for i in 0..m {
        for j in i + 1..m {
            omega_res = omega_res.max(omega(&vectors[i], &vectors[j]).abs() / (norms[i] * norms[j]));
        }
    }
    let mat = DMatrix::from_fn(m, m, |r, c| vectors[c][r] / norms[c]);
    let det = mat.determinant();
    if !(det.norm() > 1e-12) {
        return Err(Error::Degenerate);
    }
    Ok(SlagResidual { omega_res, upsilon_res: det.im.abs(), phase: det.re / det.norm() })
}

/// Residuals of `param: R^m -> C^m` at `at`, with tangents from `fd`.
pub fn slag_residual(
    param: &dyn Fn(&[f64]) -> Result<AmbientPoint>,
    at: &[f64],
    fd: FdScheme,
) -> Result<SlagResidual> {
    frame_residual(&tangent_frame(param, at, fd)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_plane_is_exact() {
        let param = |x: &[f64]| Ok(AmbientPoint::new(x.iter().map(|&v| Complex64::new(v, 0.0)).collect()));
        let r = slag_residual(&param, &[0.3, -0.2, 0.9], FdScheme::default()).unwrap();
        assert_eq!(r.omega_res, 0.0);
        assert_eq!(r.upsilon_res, 0.0);
        assert_eq!(r.phase, 1.0);
    }

    #[test]
    fn complex_line_is_not_lagrangian() {
        // (x, y) -> (x + i y, 0): omega(e1, i e1) = 1.
        let param = |x: &[f64]| Ok(AmbientPoint::new(vec![Complex64::new(x[0], x[1]), Complex64::new(0.0, 0.0)]));
        assert!(matches!(slag_residual(&param, &[0.0, 0.0], FdScheme::default()), Err(Error::Degenerate)));
    }
}
