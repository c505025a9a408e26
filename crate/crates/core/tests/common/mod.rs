#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use slag_core::TaylorPoly;

/// `f0 = sum_{d >= 3} a_d t^d` with `a_d ~ U(-1, 1) r^d`.
pub fn random_f0<R: Rng>(rng: &mut R, cap: usize, r: f64) -> TaylorPoly<f64> {
    let mut c = vec![0.0; cap + 1];
    for (d, x) in c.iter_mut().enumerate().skip(3) {
        *x = rng.random_range(-1.0..1.0) * r.powi(d as i32);
    }
    TaylorPoly::from_coeffs(c, cap)
}

pub fn parabola_f0(cap: usize) -> TaylorPoly<f64> {
    let mut c = vec![0.0; cap + 1];
    c[3] = 1.0 / 6.0;
    TaylorPoly::from_coeffs(c, cap)
}

pub type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Exact truncated series in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries(pub Vec<Q>);

impl QSeries {
    pub fn zero(cap: usize) -> Self {
        Self(vec![Q::zero(); cap + 1])
    }

    pub fn monomial(c: Q, d: usize, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if d <= cap {
            s.0[d] = c;
        }
        s
    }

    fn cap(&self) -> usize {
        self.0.len() - 1
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cap = self.cap();
        let mut out = Self::zero(cap);
        for (i, a) in self.0.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in o.0.iter().enumerate().take(cap + 1 - i) {
                out.0[i + j] += a * b;
            }
        }
        out
    }

    /// Derivative, padded with a zero top coefficient.
    pub fn deriv(&self) -> Self {
        let mut out = Self::zero(self.cap());
        for d in 1..=self.cap() {
            out.0[d - 1] = &self.0[d] * q(d as i64);
        }
        out
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.0[0].is_zero());
        let mut out = Self::zero(self.cap());
        for d in 0..=self.cap() {
            let mut acc = self.0[d].clone();
            for j in 1..=d {
                acc -= &o.0[j] * &out.0[d - j];
            }
            out.0[d] = acc / &o.0[0];
        }
        out
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|x| x.to_f64().unwrap()).collect()
    }

    pub fn max_abs(&self) -> Q {
        self.0.iter().map(|x| x.abs()).fold(Q::zero(), |a, b| if b > a { b } else { a })
    }
}

/// Complex series in `(t, sigma)`: index `j` holds the `sigma^j` coefficient.
#[derive(Clone, Debug)]
struct Biv {
    re: Vec<QSeries>,
    im: Vec<QSeries>,
}

impl Biv {
    fn real(re: Vec<QSeries>) -> Self {
        let im = re.iter().map(|s| QSeries::zero(s.cap())).collect();
        Self { re, im }
    }

    fn mul(&self, o: &Self) -> Self {
        let s = self.re.len();
        let cap = self.re[0].cap();
        let mut re = vec![QSeries::zero(cap); s];
        let mut im = vec![QSeries::zero(cap); s];
        for i in 0..s {
            for j in 0..s - i {
                re[i + j] = re[i + j].add(&self.re[i].mul(&o.re[j])).sub(&self.im[i].mul(&o.im[j]));
                im[i + j] = im[i + j].add(&self.re[i].mul(&o.im[j])).add(&self.im[i].mul(&o.re[j]));
            }
        }
        Self { re, im }
    }

    fn add(&self, o: &Self) -> Self {
        Self {
            re: self.re.iter().zip(&o.re).map(|(a, b)| a.add(b)).collect(),
            im: self.im.iter().zip(&o.im).map(|(a, b)| a.add(b)).collect(),
        }
    }
}

fn d_sigma(p: &[QSeries]) -> Vec<QSeries> {
    let cap = p[0].cap();
    (0..p.len()).map(|j| if j + 1 < p.len() { p[j + 1].scale(&q(j as i64 + 1)) } else { QSeries::zero(cap) }).collect()
}

fn d_t(p: &[QSeries]) -> Vec<QSeries> {
    p.iter().map(QSeries::deriv).collect()
}

/// `f1` for `n = 2` from `Im((1 + i f1)^2 (1 + i f0'')) = 0`, that is
/// `f1 = -f0'' (1 - f1^2) / 2`, by fixed-point iteration.
pub fn exact_f1_n2(f0: &QSeries) -> QSeries {
    let g = f0.deriv().deriv();
    let cap = f0.cap();
    let one = QSeries::monomial(q(1), 0, cap);
    let mut f1 = QSeries::zero(cap);
    for _ in 0..=cap {
        f1 = g.mul(&one.sub(&f1.mul(&f1))).scale(&Q::new(BigInt::from(-1), BigInt::from(2)));
    }
    f1
}

/// Coefficient of `sigma^(n+1)` in
/// `Im[(sigma + i phi_s)^(n-1) ((1 + i phi_tt)(1 + i phi_ss) + phi_st^2)]`
/// for `phi = f0 + f1 sigma^2/2 + f2 sigma^4/24`, expanded as a bivariate
/// series.
fn pde_sigma_coefficient(f0: &QSeries, f1: &QSeries, f2: &QSeries, n: usize) -> QSeries {
    let cap = f0.cap();
    let z = QSeries::zero(cap);
    let s_cap = n + 2;
    let mut phi = vec![z.clone(); s_cap + 1];
    phi[0] = f0.clone();
    phi[2] = f1.scale(&Q::new(BigInt::from(1), BigInt::from(2)));
    if s_cap >= 4 {
        phi[4] = f2.scale(&Q::new(BigInt::from(1), BigInt::from(24)));
    }
    let phi_s = d_sigma(&phi);
    let phi_ss = d_sigma(&phi_s);
    let phi_tt = d_t(&d_t(&phi));
    let phi_st = d_t(&phi_s);
    let one = {
        let mut v = vec![z.clone(); s_cap + 1];
        v[0] = QSeries::monomial(q(1), 0, cap);
        v
    };
    let mut sigma = vec![z.clone(); s_cap + 1];
    sigma[1] = QSeries::monomial(q(1), 0, cap);
    let zeta = Biv { re: sigma, im: phi_s.clone() };
    let a = Biv { re: one.clone(), im: phi_tt };
    let b = Biv { re: one.clone(), im: phi_ss };
    let st = Biv::real(phi_st);
    let bracket = a.mul(&b).add(&st.mul(&st));
    let mut acc = Biv::real(one);
    for _ in 0..n - 1 {
        acc = acc.mul(&zeta);
    }
    acc.mul(&bracket).im[n + 1].clone()
}

/// `f2` for `n = 2` solved from the `sigma^3` coefficient of the PDE,
/// which is affine in `f2`.
pub fn exact_f2_n2(f0: &QSeries) -> QSeries {
    let cap = f0.cap();
    let f1 = exact_f1_n2(f0);
    let a = pde_sigma_coefficient(f0, &f1, &QSeries::zero(cap), 2);
    let ab = pde_sigma_coefficient(f0, &f1, &QSeries::monomial(q(1), 0, cap), 2);
    let b = ab.sub(&a);
    a.div(&b).scale(&q(-1))
}

pub fn parabola_q(cap: usize) -> QSeries {
    QSeries::monomial(Q::new(BigInt::from(1), BigInt::from(6)), 3, cap)
}
