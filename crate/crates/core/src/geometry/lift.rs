//! Points of a chart in `C^{n+1}`.

use num_complex::Complex64;

use super::{
    group_motion, group_motion_inverse, lambda_star, momentum_so_n, phi_map, slag_residual, sphere_chart, sphere_samples,
    tangent_basis, AmbientPoint, FdScheme, SlagResidual,
};
use crate::engine::{pde_residual, Chart, ResidualGrid, ResidualReport};
use crate::error::{Error, Result};

/// `Phi_{a,theta}^{-1}(lambda^j (t + i phi_t, (sigma + i phi_sigma) u))`.
pub fn chart_point(c: &Chart, t: f64, sigma: f64, u: &[f64]) -> Result<AmbientPoint> {
    if u.len() != c.n {
        return Err(Error::InvalidArgument(format!("u has {} entries, expected {}", u.len(), c.n)));
    }
    if !c.in_domain(t, sigma) {
        return Err(Error::OutsideDomain { t, sigma });
    }
    let p = c.phi.eval_with_partials(t, sigma);
    let w = Complex64::new(t, p.phi_t);
    let zeta = Complex64::new(sigma, p.phi_s);
    let local = phi_map(w, zeta, u)?;
    let branched = lambda_star(&local, c.branch as i64, c.n);
    Ok(group_motion_inverse(&branched, c.frame.a, c.frame.theta, c.n))
}

/// Distance from `p` to the point of `c`'s sheet lying over the same
/// normalized real coordinates.
///
/// After undoing the frame and the branch, `p` has real parts
/// `(t, sigma u)`; the sheet point there is `(t + i phi_t, (sigma + i phi_sigma) u)`.
pub fn sheet_distance(c: &Chart, p: &AmbientPoint) -> Result<f64> {
    let q = lambda_star(&group_motion(p, c.frame.a, c.frame.theta, c.n), -(c.branch as i64), c.n);
    let t = q.z[0].re;
    let x: Vec<f64> = q.z[1..].iter().map(|z| z.re).collect();
    let sigma = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let u: Vec<f64> = if sigma > 0.0 {
        x.iter().map(|v| v / sigma).collect()
    } else {
        let mut e = vec![0.0; c.n];
        e[0] = 1.0;
        e
    };
    if !c.in_domain(t, sigma) {
        return Err(Error::OutsideDomain { t, sigma });
    }
    let d = c.phi.eval_with_partials(t, sigma);
    let g = phi_map(Complex64::new(t, d.phi_t), Complex64::new(sigma, d.phi_s), &u)?;
    Ok(q.distance(&g))
}

/// Special Lagrangian residuals of `c` at `(t, sigma, u)`, using the
/// parametrization `(t, sigma, s) -> chart_point(t, sigma, u(s))` with `u(s)`
/// a chart of the sphere around `u`.
pub fn chart_slag_residual(c: &Chart, t: f64, sigma: f64, u: &[f64], fd: FdScheme) -> Result<SlagResidual> {
    let basis = tangent_basis(u);
    let param = |x: &[f64]| chart_point(c, x[0], x[1], &sphere_chart(u, &basis, &x[2..]));
    let mut at = vec![0.0; c.n + 1];
    at[0] = t;
    at[1] = sigma;
    slag_residual(&param, &at, fd)
}

/// PDE, `omega`, `Upsilon` and momentum residuals of `c` over `grid` with
/// `directions` sphere samples. Grid points with `sigma` within `2h` of zero
/// are skipped for the ambient checks, where the parametrization degenerates.
pub fn chart_residuals(c: &Chart, grid: &ResidualGrid, directions: usize, seed: u64, fd: FdScheme) -> Result<ResidualReport> {
    let mut report = pde_residual(&c.phi, grid)?;
    let dirs = sphere_samples(c.n, directions.saturating_sub(c.n), seed);
    let (mut om, mut up, mut mu) = (0.0_f64, 0.0_f64, 0.0_f64);
    for (t, s) in grid.points() {
        let s = s.abs();
        for u in dirs.iter().take(directions.max(1)) {
            let p = chart_point(c, t, s, u)?;
            mu = mu.max(momentum_so_n(&p).amax());
            if s > 2.0 * fd.h {
                let r = chart_slag_residual(c, t, s, u, fd)?;
                om = om.max(r.omega_res);
                up = up.max(r.upsilon_res);
            }
        }
    }
    report.max_omega = Some(om);
    report.max_upsilon = Some(up);
    report.max_momentum = Some(mu);
    Ok(report)
}
