//! Series with complex coefficients, stored as real and imaginary parts.

use super::real::Real;
use super::taylor::TaylorPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexSeries<T = f64> {
    pub re: TaylorPoly<T>,
    pub im: TaylorPoly<T>,
}

impl<T: Real> ComplexSeries<T> {
    pub fn new(re: TaylorPoly<T>, im: TaylorPoly<T>) -> Self {
        assert_eq!(re.degree_cap(), im.degree_cap(), "degree caps differ");
        Self { re, im }
    }

    pub fn zero(cap: usize) -> Self {
        Self::new(TaylorPoly::zero(cap), TaylorPoly::zero(cap))
    }

    pub fn one(cap: usize) -> Self {
        Self::new(TaylorPoly::one(cap), TaylorPoly::zero(cap))
    }

    pub fn from_real(re: TaylorPoly<T>) -> Self {
        let cap = re.degree_cap();
        Self::new(re, TaylorPoly::zero(cap))
    }

    /// `1 + i x` for real `x`.
    pub fn one_plus_i(x: &TaylorPoly<T>) -> Self {
        Self::new(TaylorPoly::one(x.degree_cap()), x.clone())
    }

    pub fn degree_cap(&self) -> usize {
        self.re.degree_cap()
    }

    pub fn with_cap(&self, cap: usize) -> Self {
        Self::new(self.re.with_cap(cap), self.im.with_cap(cap))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let re = &(&self.re * &other.re) - &(&self.im * &other.im);
        let im = &(&self.re * &other.im) + &(&self.im * &other.re);
        Self::new(re, im)
    }

    pub fn scale(&self, c: T) -> Self {
        Self::new(self.re.scale(c), self.im.scale(c))
    }

    pub fn mul_real(&self, x: &TaylorPoly<T>) -> Self {
        Self::new(&self.re * x, &self.im * x)
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, m: usize) -> Self {
        let mut result = Self::one(self.degree_cap());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_of_one_plus_it() {
        // (1 + i t)^2 = 1 - t^2 + 2 i t
        let t = TaylorPoly::<f64>::variable(3);
        let z = ComplexSeries::one_plus_i(&t).powi(2);
        assert_eq!(z.re.coeffs(), &[1.0, 0.0, -1.0, 0.0]);
        assert_eq!(z.im.coeffs(), &[0.0, 2.0, 0.0, 0.0]);
    }
}
