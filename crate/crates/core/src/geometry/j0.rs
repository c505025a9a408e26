//! The almost complex structure `J0` on `M0 = {(w, zeta) : zeta != 0}`.
//!
//! Covectors are stored by their values on the real coordinate vectors
//! `(d/dRe w, d/dIm w, d/dRe zeta, d/dIm zeta)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Covector = [Complex64; 4];

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };
const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

const DW: Covector = [ONE, I, ZERO, ZERO];
const DW_BAR: Covector = [ONE, Complex64 { re: 0.0, im: -1.0 }, ZERO, ZERO];
const DZ: Covector = [ZERO, ZERO, ONE, I];
const DZ_BAR: Covector = [ZERO, ZERO, ONE, Complex64 { re: 0.0, im: -1.0 }];

fn combo(a: Complex64, x: &Covector, b: Complex64, y: &Covector) -> Covector {
    std::array::from_fn(|k| a * x[k] + b * y[k])
}

fn check_regular(zeta: Complex64) -> Result<()> {
    if zeta.norm() == 0.0 {
        return Err(Error::SingularLocus);
    }
    Ok(())
}

/// `omega1 = dw + i zeta_bar^(n-1) dzeta_bar / |zeta|^(n-1)` and
/// `omega2 = dw_bar + i zeta^(n-1) dzeta / |zeta|^(n-1)`.
pub fn j0_coframe(_w: Complex64, zeta: Complex64, n: usize) -> Result<(Covector, Covector)> {
    check_regular(zeta)?;
    let r = zeta.norm().powi(n as i32 - 1);
    let c1 = I * zeta.conj().powu(n as u32 - 1) / r;
    let c2 = I * zeta.powu(n as u32 - 1) / r;
    Ok((combo(ONE, &DW, c1, &DZ_BAR), combo(ONE, &DW_BAR, c2, &DZ)))
}

/// `eta1 = |zeta|^(n-1)/zeta_bar^n dw + i dzeta_bar/zeta_bar` and
/// `eta2 = |zeta|^(n-1)/zeta^n dw_bar + i dzeta/zeta`.
pub fn eta_covectors(_w: Complex64, zeta: Complex64, n: usize) -> Result<(Covector, Covector)> {
    check_regular(zeta)?;
    let r = zeta.norm().powi(n as i32 - 1);
    let e1 = combo(r / zeta.conj().powu(n as u32), &DW, I / zeta.conj(), &DZ_BAR);
    let e2 = combo(r / zeta.powu(n as u32), &DW_BAR, I / zeta, &DZ);
    Ok((e1, e2))
}

/// Whether `gamma` lies in `span{omega1, omega2}` at `zeta`; returns the
/// size of the component outside the span.
pub fn in_coframe_span(gamma: &Covector, zeta: Complex64, n: usize) -> Result<f64> {
    check_regular(zeta)?;
    // Coefficients of gamma in (dw, dw_bar, dzeta, dzeta_bar).
    let g_w = (gamma[0] - I * gamma[1]) / 2.0;
    let g_wb = (gamma[0] + I * gamma[1]) / 2.0;
    let g_z = (gamma[2] - I * gamma[3]) / 2.0;
    let g_zb = (gamma[2] + I * gamma[3]) / 2.0;
    let r = zeta.norm().powi(n as i32 - 1);
    let c1 = I * zeta.conj().powu(n as u32 - 1) / r;
    let c2 = I * zeta.powu(n as u32 - 1) / r;
    Ok((g_zb - g_w * c1).norm().max((g_z - g_wb * c2).norm()))
}

/// Real Jacobian of an affine map of `C^2 = R^4`, read off from images of
/// the coordinate vectors.
fn affine_jacobian(map: &dyn Fn(Complex64, Complex64) -> (Complex64, Complex64)) -> [[f64; 4]; 4] {
    let flat = |p: (Complex64, Complex64)| [p.0.re, p.0.im, p.1.re, p.1.im];
    let origin = flat(map(ZERO, ZERO));
    let basis = [(ONE, ZERO), (I, ZERO), (ZERO, ONE), (ZERO, I)];
    let mut jac = [[0.0; 4]; 4];
    for (col, (w, z)) in basis.into_iter().enumerate() {
        let img = flat(map(w, z));
        for row in 0..4 {
            jac[row][col] = img[row] - origin[row];
        }
    }
    jac
}

/// `(F^* alpha)_j = sum_i alpha_i J_ij`, with `alpha` taken at the image.
fn pull(alpha_at_image: &Covector, jac: &[[f64; 4]; 4]) -> Covector {
    std::array::from_fn(|j| (0..4).map(|i| alpha_at_image[i] * jac[i][j]).sum())
}

/// `C(w, zeta) = (w, e^{i pi/n} zeta)`.
pub fn c_map(w: Complex64, zeta: Complex64, n: usize) -> (Complex64, Complex64) {
    (w, Complex64::from_polar(1.0, std::f64::consts::PI / n as f64) * zeta)
}

/// `(C^* omega1, C^* omega2)` at `(w, zeta)`.
pub fn c_map_pullback(w: Complex64, zeta: Complex64, n: usize) -> Result<(Covector, Covector)> {
    let (cw, cz) = c_map(w, zeta, n);
    let (o1, o2) = j0_coframe(cw, cz, n)?;
    let jac = affine_jacobian(&|w, z| c_map(w, z, n));
    Ok((pull(&o1, &jac), pull(&o2, &jac)))
}

/// `F_{a,b}(w, zeta) = (b_bar^n / |b|^(n-1) w + a, b zeta)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FMap {
    pub a: Complex64,
    pub b: Complex64,
    pub n: usize,
}

impl FMap {
    pub fn apply(&self, w: Complex64, zeta: Complex64) -> (Complex64, Complex64) {
        let beta = self.b.conj().powu(self.n as u32) / self.b.norm().powi(self.n as i32 - 1);
        (beta * w + self.a, self.b * zeta)
    }
}

/// Pulls back a covector field `field` through `f` at `(w, zeta)`.
pub fn f_map_pullback(
    f: &FMap,
    field: &dyn Fn(Complex64, Complex64) -> Result<Covector>,
    w: Complex64,
    zeta: Complex64,
) -> Result<Covector> {
    let (fw, fz) = f.apply(w, zeta);
    let jac = affine_jacobian(&|w, z| f.apply(w, z));
    Ok(pull(&field(fw, fz)?, &jac))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Covector, b: &Covector, tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn coframe_at_unit_zeta() {
        let (o1, _) = j0_coframe(Complex64::new(0.3, 0.1), ONE, 3).unwrap();
        assert!(close(&o1, &combo(ONE, &DW, I, &DZ_BAR), 0.0));
    }

    #[test]
    fn singular_locus_is_rejected() {
        assert!(matches!(j0_coframe(ONE, ZERO, 2), Err(Error::SingularLocus)));
    }

    #[test]
    fn c_is_antilinear() {
        let (w, z) = (Complex64::new(0.2, -0.7), Complex64::new(-0.4, 0.9));
        for n in 2..6 {
            let (p1, p2) = c_map_pullback(w, z, n).unwrap();
            let (o1, o2) = j0_coframe(w, z, n).unwrap();
            let conj = |c: &Covector| -> Covector { std::array::from_fn(|k| c[k].conj()) };
            assert!(close(&p1, &conj(&o2), 1e-14));
            assert!(close(&p2, &conj(&o1), 1e-14));
        }
    }
}
