//! The circle of invariant special Lagrangian planes `P_psi`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

/// `P_psi`: `z0 in e^{-i n psi} R` and `z_k in e^{i psi} R`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneP {
    pub psi: f64,
    pub n: usize,
    /// Orthonormal real basis, `n + 1` vectors in `C^{n+1}`.
    pub basis: Vec<Vec<Complex64>>,
}

impl PlaneP {
    pub fn new(psi: f64, n: usize) -> Self {
        let mut basis = Vec::with_capacity(n + 1);
        let mut b0 = vec![Complex64::new(0.0, 0.0); n + 1];
        b0[0] = Complex64::from_polar(1.0, -(n as f64) * psi);
        basis.push(b0);
        let e = Complex64::from_polar(1.0, psi);
        for k in 1..=n {
            let mut bk = vec![Complex64::new(0.0, 0.0); n + 1];
            bk[k] = e;
            basis.push(bk);
        }
        Self { psi, n, basis }
    }

    /// Left-hand sides of the `n + 1` defining equations at `v`.
    pub fn equations(&self, v: &[Complex64]) -> Vec<f64> {
        let (s0, c0) = (self.n as f64 * self.psi).sin_cos();
        let (s, c) = self.psi.sin_cos();
        let mut out = vec![c0 * v[0].im + s0 * v[0].re];
        out.extend(v[1..].iter().map(|z| c * z.im - s * z.re));
        out
    }

    /// Whether `v` satisfies all equations within `tol`.
    pub fn contains(&self, v: &[Complex64], tol: f64) -> bool {
        self.equations(v).iter().all(|e| e.abs() <= tol)
    }

    /// Linear parametrization `x -> sum x_i b_i`.
    pub fn point(&self, x: &[f64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.n + 1];
        for (xi, b) in x.iter().zip(&self.basis) {
            for (o, bk) in out.iter_mut().zip(b) {
                *o += bk * *xi;
            }
        }
        out
    }

    /// Orthogonal projector onto the plane, as a real `2(n+1)` matrix.
    pub fn projector(&self) -> DMatrix<f64> {
        let dim = 2 * (self.n + 1);
        let b = DMatrix::from_fn(dim, self.n + 1, |r, c| {
            let z = self.basis[c][r / 2];
            if r % 2 == 0 { z.re } else { z.im }
        });
        &b * b.transpose()
    }

    /// Real basis of the projection to `C^n`, as a `2n x n` matrix.
    pub fn fibre_projection(&self) -> DMatrix<f64> {
        DMatrix::from_fn(2 * self.n, self.n, |r, c| {
            let z = self.basis[c + 1][1 + r / 2];
            if r % 2 == 0 { z.re } else { z.im }
        })
    }
}

/// The angles `psi in [0, pi)` whose plane contains the real line
/// `e^{i gamma} R` in the fixed `C`: the roots of `sin(n psi + gamma)`.
pub fn lines_planes(gamma: f64, n: usize) -> Vec<f64> {
    let g = |psi: f64| (n as f64 * psi + gamma).sin();
    let steps = 64 * n;
    let mut roots = Vec::new();
    let mut a = 0.0;
    let mut ga = g(a);
    for i in 1..=steps {
        let b = PI * i as f64 / steps as f64;
        let gb = g(b);
        if ga == 0.0 {
            roots.push(a);
        } else if ga * gb < 0.0 {
            let (mut lo, mut hi) = (a, b);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if g(lo) * g(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        a = b;
        ga = gb;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_satisfies_equations() {
        let p = PlaneP::new(0.37, 4);
        for b in &p.basis {
            assert!(p.contains(b, 1e-15));
        }
    }

    #[test]
    fn period_pi() {
        let a = PlaneP::new(0.4, 3).projector();
        let b = PlaneP::new(0.4 + PI, 3).projector();
        assert!((a - b).amax() < 1e-12);
    }

    #[test]
    fn psi_zero_is_real_space() {
        let p = PlaneP::new(0.0, 2);
        let v = p.point(&[1.0, 2.0, 3.0]);
        assert!(v.iter().all(|z| z.im == 0.0));
    }
}
