//! Truncated Taylor polynomials in one variable.

use std::ops::{Add, Mul, Neg, Sub};

use super::real::Real;
use crate::error::{Error, Result};

/// Coefficients `c_0..=c_D` of a series truncated at degree `D` (the cap).
///
/// Every operation returns the exact Taylor coefficients of the result up to
/// its own cap; nothing above the cap is ever inferred.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorPoly<T = f64> {
    coeffs: Vec<T>,
}

impl<T: Real> TaylorPoly<T> {
    pub fn zero(cap: usize) -> Self {
        Self { coeffs: vec![T::zero(); cap + 1] }
    }

    pub fn constant(c: T, cap: usize) -> Self {
        let mut p = Self::zero(cap);
        p.coeffs[0] = c;
        p
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(T::one(), cap)
    }

    /// The series `t`.
    pub fn variable(cap: usize) -> Self {
        let mut p = Self::zero(cap);
        if cap >= 1 {
            p.coeffs[1] = T::one();
        }
        p
    }

    /// Pads with zeros or drops coefficients so the cap is `cap`.
    pub fn from_coeffs(mut coeffs: Vec<T>, cap: usize) -> Self {
        coeffs.resize(cap + 1, T::zero());
        Self { coeffs }
    }

    pub fn from_f64_coeffs(coeffs: &[f64], cap: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::lift(c)).collect(), cap)
    }

    pub fn degree_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [T] {
        &mut self.coeffs
    }

    /// Coefficient of `t^d`, zero above the cap.
    pub fn coeff(&self, d: usize) -> T {
        self.coeffs.get(d).copied().unwrap_or_else(T::zero)
    }

    /// Re-truncates (or zero-pads) to a new cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), cap)
    }

    pub fn cast<U: Real>(&self) -> TaylorPoly<U> {
        TaylorPoly { coeffs: self.coeffs.iter().map(|c| U::lift(c.as_f64())).collect() }
    }

    pub fn to_f64(&self) -> TaylorPoly<f64> {
        self.cast()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs().as_f64()).fold(0.0, f64::max)
    }

    fn check_cap(&self, other: &Self) -> Result<()> {
        if self.degree_cap() == other.degree_cap() {
            Ok(())
        } else {
            Err(Error::Shape { left: self.degree_cap(), right: other.degree_cap() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    /// Cauchy product truncated at the shared cap.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_cap(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn zip(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f(a, b)).collect() }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let cap = self.degree_cap();
        let mut out = vec![T::zero(); cap + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs[..=cap - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    pub fn scale(&self, c: T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&a| a * c).collect() }
    }

    /// Adds a constant to the `t^0` coefficient.
    pub fn add_constant(&self, c: T) -> Self {
        let mut p = self.clone();
        p.coeffs[0] += c;
        p
    }

    /// `1/a` for `a(0) != 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::SingularDivision);
        }
        let cap = self.degree_cap();
        let inv0 = a0.recip_exact();
        let mut b = vec![T::zero(); cap + 1];
        b[0] = inv0;
        for m in 1..=cap {
            let mut acc = T::zero();
            for i in 1..=m {
                acc += self.coeffs[i] * b[m - i];
            }
            b[m] = -acc * inv0;
        }
        Ok(Self { coeffs: b })
    }

    /// Exact derivative; the cap drops by one (stays 0 for constants).
    pub fn derivative(&self) -> Self {
        let cap = self.degree_cap();
        if cap == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=cap).map(|d| self.coeffs[d] * T::from_usize(d)).collect();
        Self { coeffs }
    }

    /// Antiderivative with zero constant term; the cap grows by one, so
    /// `p.antiderivative().derivative() == p` holds exactly up to rounding.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (d, &c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.quot(T::from_usize(d + 1)));
        }
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, t: T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * t + c)
    }

    /// Value, first and second derivative at `t`.
    pub fn eval_jet2(&self, t: T) -> [T; 3] {
        let (mut p, mut dp, mut ddp) = (T::zero(), T::zero(), T::zero());
        for &c in self.coeffs.iter().rev() {
            ddp = ddp * t + dp + dp;
            dp = dp * t + p;
            p = p * t + c;
        }
        [p, dp, ddp]
    }

    /// `self(inner(t))`, requiring `inner(0) = 0`; the result has the cap of
    /// `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let q0 = inner.coeffs[0];
        if !q0.is_zero() {
            return Err(Error::CompositionDomain(q0.as_f64()));
        }
        let cap = inner.degree_cap();
        let mut acc = Self::zero(cap);
        for &c in self.coeffs.iter().take(cap + 1).rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `b` with `self(b(t)) = t`, for `a(0) = 0`,
    /// `a'(0) != 0`.
    pub fn revert(&self) -> Result<Self> {
        let cap = self.degree_cap();
        if cap == 0 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NonInvertible);
        }
        let a1 = self.coeffs[1];
        let t = Self::variable(cap);
        let mut b = t.scale(a1.recip_exact());
        // Each pass fixes one more coefficient of the fixed point
        // b = (t - (a - a1 t)(b)) / a1.
        let mut nonlinear = self.clone();
        nonlinear.coeffs[1] = T::zero();
        for _ in 1..cap {
            let resid = nonlinear.compose(&b)?;
            b = (&t - &resid).scale(a1.recip_exact());
        }
        Ok(b)
    }

    /// Re-centres the polynomial: coefficients of `h -> self(x0 + h)`.
    ///
    /// The stored coefficients are treated as an exact polynomial.
    pub fn shift(&self, x0: T) -> Self {
        let mut c = self.coeffs.clone();
        let len = c.len();
        // Repeated synthetic division by (h - x0).
        for i in 0..len {
            for j in (i..len - 1).rev() {
                let v = c[j + 1] * x0;
                c[j] += v;
            }
        }
        Self { coeffs: c }
    }

    pub fn powi(&self, m: usize) -> Self {
        let mut result = Self::one(self.degree_cap());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<T: Real> $tr<&TaylorPoly<T>> for &TaylorPoly<T> {
            type Output = TaylorPoly<T>;
            fn $method(self, rhs: &TaylorPoly<T>) -> TaylorPoly<T> {
                assert_eq!(self.degree_cap(), rhs.degree_cap(), "degree caps differ");
                let f: fn(&TaylorPoly<T>, &TaylorPoly<T>) -> TaylorPoly<T> = $body;
                f(self, rhs)
            }
        }
        impl<T: Real> $tr<TaylorPoly<T>> for TaylorPoly<T> {
            type Output = TaylorPoly<T>;
            fn $method(self, rhs: TaylorPoly<T>) -> TaylorPoly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.zip(b, |x, y| x + y));
binop!(Sub, sub, |a, b| a.zip(b, |x, y| x - y));
binop!(Mul, mul, |a, b| a.mul_unchecked(b));

impl<T: Real> Neg for &TaylorPoly<T> {
    type Output = TaylorPoly<T>;
    fn neg(self) -> TaylorPoly<T> {
        TaylorPoly { coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }
}

impl<T: Real> Neg for TaylorPoly<T> {
    type Output = TaylorPoly<T>;
    fn neg(self) -> TaylorPoly<T> {
        -&self
    }
}
