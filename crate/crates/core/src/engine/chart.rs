//! Local extensions anchored at one point of an arc.

use crate::arc::{normalize_at, ArcSpec, Frame, NormalizedArc};
use crate::error::{Error, Result};
use crate::series::{Real, SigmaExpansion, TaylorPoly};

use super::radius::{estimate_radius, RadiusEstimate, DEFAULT_TAU};
use super::recursion::extend_series;

/// A truncated local solution together with the motion that normalized it.
///
/// Branch `j` stands for `lambda^j` applied to the graph of `phi`, pulled
/// back through the frame.
#[derive(Clone, Debug, PartialEq)]
pub struct Chart {
    pub n: usize,
    pub branch: usize,
    pub frame: Frame,
    pub phi: SigmaExpansion<f64>,
    pub radius: RadiusEstimate,
    /// Arc parameter of the chart centre.
    pub center: f64,
}

impl Chart {
    pub fn new(branch: usize, frame: Frame, phi: SigmaExpansion<f64>, radius: RadiusEstimate, center: f64) -> Result<Self> {
        let n = phi.n();
        if branch >= n {
            return Err(Error::InvalidArgument(format!("branch {branch} outside [0, {n})")));
        }
        Ok(Self { n, branch, frame, phi, radius, center })
    }

    /// Extends a normalized arc in precision `T`, then stores the result in
    /// double precision.
    pub fn from_normalized<T: Real>(na: &NormalizedArc, branch: usize, order: usize) -> Result<Self> {
        let phi: SigmaExpansion<T> = extend_series(&na.f0.cast::<T>(), na.n, order)?;
        let radius = estimate_radius(&phi, DEFAULT_TAU);
        Self::new(branch, na.frame, phi.cast(), radius, na.s0)
    }

    /// Normalizes `arc` at `s0` and extends to order `order` in precision `T`.
    pub fn build<T: Real>(arc: &ArcSpec, s0: f64, n: usize, branch: usize, order: usize) -> Result<Self> {
        Self::from_normalized::<T>(&normalize_at(arc, s0, n)?, branch, order)
    }

    /// The flat chart `phi = 0` with identity frame.
    pub fn flat(n: usize, branch: usize, order: usize, cap: usize) -> Result<Self> {
        let phi = extend_series(&TaylorPoly::<f64>::zero(cap), n, order)?;
        Self::new(branch, Frame::identity(), phi, RadiusEstimate::unbounded(), 0.0)
    }

    pub fn order(&self) -> usize {
        self.phi.order()
    }

    pub fn degree_cap(&self) -> usize {
        self.phi.degree_cap()
    }

    /// Whether `(t, sigma)` lies inside the estimated convergence region.
    pub fn in_domain(&self, t: f64, sigma: f64) -> bool {
        t.is_finite() && sigma.is_finite() && t.abs() <= self.radius.rho_t && sigma.abs() <= self.radius.rho_sigma
    }
}
