//! Scalar backends for the series arithmetic.
//!
//! Everything in [`crate::series`] and [`crate::engine`] that manipulates
//! coefficients is generic over [`Real`]. Two backends ship: `f64` and the
//! double-double [`TwoFloat`], which carries roughly 32 significant digits and
//! is needed when residuals must be resolved far below `f64` rounding.

use std::fmt::Debug;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::Float;
use twofloat::TwoFloat;

/// Coefficient field for truncated power series.
pub trait Real:
    Float + AddAssign + SubAssign + MulAssign + DivAssign + Debug + Send + Sync + 'static
{
    /// Short backend name used in reports.
    const NAME: &'static str;

    fn lift(x: f64) -> Self;

    /// Nearest `f64`.
    fn as_f64(self) -> f64;

    /// Correctly rounded quotient. Generic code divides through this rather
    /// than `/`, because `TwoFloat / TwoFloat` in twofloat 0.8 drops the low
    /// word of the reciprocal.
    fn quot(self, rhs: Self) -> Self;

    fn recip_exact(self) -> Self {
        Self::one().quot(self)
    }

    /// Exact for `k < 2^53`.
    fn from_usize(k: usize) -> Self {
        Self::lift(k as f64)
    }

    /// Lossless decimal rendering; [`Real::parse_decimal`] inverts it.
    fn to_decimal(self) -> String;

    fn parse_decimal(s: &str) -> Option<Self>;
}

impl Real for f64 {
    const NAME: &'static str = "double";

    fn lift(x: f64) -> Self {
        x
    }

    fn as_f64(self) -> f64 {
        self
    }

    fn quot(self, rhs: Self) -> Self {
        self / rhs
    }

    fn to_decimal(self) -> String {
        format!("{self:e}")
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        s.trim().parse().ok()
    }
}

impl Real for TwoFloat {
    const NAME: &'static str = "extended";

    fn lift(x: f64) -> Self {
        TwoFloat::from(x)
    }

    fn as_f64(self) -> f64 {
        self.hi() + self.lo()
    }

    /// Three-term long division on the leading words.
    fn quot(self, rhs: Self) -> Self {
        let d = rhs.hi();
        let q1 = self.hi() / d;
        let r = self - rhs * q1;
        let q2 = r.hi() / d;
        let r = r - rhs * q2;
        let q3 = r.hi() / d;
        TwoFloat::from(q1) + q2 + q3
    }

    /// Rendered as `"hi lo"`, each component in shortest round-trip form.
    fn to_decimal(self) -> String {
        format!("{:e} {:e}", self.hi(), self.lo())
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        let mut parts = s.split_whitespace();
        let hi: f64 = parts.next()?.parse().ok()?;
        let lo: f64 = match parts.next() {
            Some(p) => p.parse().ok()?,
            None => 0.0,
        };
        if parts.next().is_some() {
            return None;
        }
        if lo == 0.0 {
            return Some(TwoFloat::from(hi));
        }
        TwoFloat::try_from((hi, lo)).ok()
    }
}

/// `0!, 1!, ..., m!` in the given backend.
pub fn factorials<T: Real>(m: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(m + 1);
    let mut acc = T::one();
    out.push(acc);
    for k in 1..=m {
        acc *= T::from_usize(k);
        out.push(acc);
    }
    out
}
