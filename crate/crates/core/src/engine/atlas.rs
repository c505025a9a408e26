//! Multi-chart coverings of an arc and their mutual consistency.

use std::f64::consts::TAU;

use crate::arc::{existence_gate, normalize_at, ArcSpec, Gate};
use crate::error::{Error, Result};
use crate::geometry::{chart_point, sheet_distance, sphere_samples};
use crate::series::Real;

use super::chart::Chart;
use super::residual::linspace;

/// Centres `s0 + m * spacing` covering the arc's domain (one period for
/// closed arcs).
pub fn atlas_centers(arc: &ArcSpec, spacing: f64) -> Result<Vec<f64>> {
    if !(spacing.is_finite() && spacing > 0.0) {
        return Err(Error::InvalidArgument(format!("spacing must be positive, got {spacing}")));
    }
    let (start, end, closed) = match (arc.closed, arc.period) {
        (true, Some(p)) => (0.0, p, true),
        _ => (arc.domain.0, arc.domain.1, false),
    };
    let span = (end - start) / spacing;
    let count = if closed {
        (span - 1e-9).ceil().max(1.0) as usize
    } else {
        (span + 1e-9).floor() as usize + 1
    };
    Ok((0..count).map(|m| start + m as f64 * spacing).collect())
}

/// Charts along the arc with the branch carried continuously.
///
/// The tangent angle is unwrapped from the first centre; whenever the
/// normalizing angle `theta` is reduced by `2 pi / n`, the same sheet is
/// described by a branch index two steps further on.
pub fn build_atlas<T: Real>(arc: &ArcSpec, n: usize, branch: usize, spacing: f64, order: usize) -> Result<Vec<Chart>> {
    if n < 2 || branch >= n {
        return Err(Error::InvalidArgument(format!("need n >= 2 and branch < n, got n = {n}, branch = {branch}")));
    }
    if arc.closed {
        if let Gate::Obstruction { shift } = existence_gate(arc, n)? {
            return Err(Error::Obstruction { shift, n });
        }
    }
    let centers = atlas_centers(arc, spacing)?;
    let angles = arc.unwrapped_tangent_angles(&centers)?;
    let step = TAU / n as f64;
    let mut charts = Vec::with_capacity(centers.len());
    for (&s, &angle) in centers.iter().zip(&angles) {
        let na = normalize_at(arc, s, n)?;
        let theta_cont = -angle / n as f64;
        let q = ((theta_cont - na.frame.theta) / step).round() as i64;
        let b = (branch as i64 + 2 * q).rem_euclid(n as i64) as usize;
        charts.push(Chart::from_normalized::<T>(&na, b, order)?);
    }
    check_coverage(arc, &charts)?;
    Ok(charts)
}

/// Normalized `t` coordinate of `s`'s arc point in chart `c`.
fn local_t(arc: &ArcSpec, c: &Chart, s: f64) -> f64 {
    c.frame.forward(c.n, arc.point(s)).re
}

fn check_coverage(arc: &ArcSpec, charts: &[Chart]) -> Result<()> {
    let m = charts.len();
    if m < 2 {
        return Ok(());
    }
    let pairs = if arc.closed { m } else { m - 1 };
    for i in 0..pairs {
        let (a, b) = (&charts[i], &charts[(i + 1) % m]);
        for (from, to) in [(a, b), (b, a)] {
            let reach = local_t(arc, from, to.center).abs();
            if reach >= from.radius.rho_t {
                return Err(Error::Coverage(format!(
                    "chart at s = {} reaches t = {:.3e} but neighbour at s = {} sits at |t| = {reach:.3e}",
                    from.center, from.radius.rho_t, to.center
                )));
            }
        }
    }
    Ok(())
}

/// Largest distance from points of `c1` over the stretch of arc between
/// the two centres to the sheet of `c2`.
pub fn overlap_agreement(c1: &Chart, c2: &Chart, sigma_max: f64, samples: usize) -> Result<f64> {
    if c1.n != c2.n {
        return Err(Error::InvalidArgument("charts have different n".into()));
    }
    if !(sigma_max.is_finite() && sigma_max >= 0.0) || samples == 0 {
        return Err(Error::InvalidArgument("need sigma_max >= 0 and samples > 0".into()));
    }
    let n = c1.n;
    let origin2 = c2.frame.backward(n, num_complex::Complex64::new(0.0, 0.0));
    let q = c1.frame.forward(n, origin2);
    let t2 = q.re;
    if t2.abs() >= c1.radius.rho_t.min(c2.radius.rho_t) {
        return Err(Error::Disjoint);
    }
    // The second centre must sit on the first chart's arc, not merely
    // project into its t-range.
    let on_arc = c1.phi.term(0).derivative().eval(t2);
    if (q.im - on_arc).abs() > 1e-6 * (1.0 + t2.abs()) {
        return Err(Error::Disjoint);
    }
    let ts = linspace(t2.min(0.0), t2.max(0.0), samples);
    let sigmas: Vec<f64> = (1..=samples).map(|i| sigma_max * i as f64 / samples as f64).collect();
    let dirs = sphere_samples(n, 2, 0x5eed);
    let mut worst = 0.0_f64;
    for &t in &ts {
        for &s in &sigmas {
            for u in &dirs {
                let p = chart_point(c1, t, s, u)?;
                worst = worst.max(sheet_distance(c2, &p)?);
            }
        }
    }
    Ok(worst)
}
