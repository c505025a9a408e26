//! OBJ and CSV export of chart grids.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::write_atomic;
use crate::engine::linspace;
use crate::engine::Chart;
use crate::error::{Error, Result};
use crate::geometry::{chart_point, sphere_samples};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeshMode {
    /// Quad mesh of `(z0, z1)` at `u = e1`, one 4-vector per vertex.
    Reduced,
    /// Point cloud of chart points over a `(t, sigma, u)` grid.
    Embedded,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeshGrid {
    pub t_half_width: f64,
    pub sigma_max: f64,
    pub nt: usize,
    pub nsigma: usize,
    /// Directions on the sphere (embedded mode only).
    pub nu: usize,
    pub seed: u64,
}

impl Default for MeshGrid {
    fn default() -> Self {
        Self { t_half_width: 0.1, sigma_max: 0.05, nt: 21, nsigma: 11, nu: 8, seed: 0 }
    }
}

impl MeshGrid {
    fn validate(&self) -> Result<()> {
        if self.nt < 2 || self.nsigma < 2 || self.nu == 0 {
            return Err(Error::InvalidArgument("mesh grid needs nt, nsigma >= 2 and nu >= 1".into()));
        }
        if !(self.t_half_width > 0.0 && self.sigma_max > 0.0) {
            return Err(Error::InvalidArgument("mesh extents must be positive".into()));
        }
        Ok(())
    }
}

fn reduced_obj(charts: &[Chart], g: &MeshGrid) -> Result<(String, usize)> {
    let mut out = String::new();
    let mut base = 0usize;
    for c in charts {
        let u = {
            let mut e = vec![0.0; c.n];
            e[0] = 1.0;
            e
        };
        for t in linspace(-g.t_half_width, g.t_half_width, g.nt) {
            for s in linspace(0.0, g.sigma_max, g.nsigma) {
                let p = chart_point(c, t, s, &u)?;
                let _ = writeln!(out, "v {:e} {:e} {:e} {:e}", p.z[0].re, p.z[0].im, p.z[1].re, p.z[1].im);
            }
        }
        for i in 0..g.nt - 1 {
            for j in 0..g.nsigma - 1 {
                let v = |a: usize, b: usize| base + a * g.nsigma + b + 1;
                let _ = writeln!(out, "f {} {} {} {}", v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1));
            }
        }
        base += g.nt * g.nsigma;
    }
    Ok((out, base))
}

fn embedded_csv(charts: &[Chart], g: &MeshGrid) -> Result<(String, usize)> {
    let n = charts[0].n;
    let mut out = (0..=n).map(|k| format!("x{k},y{k}")).collect::<Vec<_>>().join(",");
    out.push('\n');
    let dirs: Vec<Vec<f64>> = sphere_samples(n, g.nu.saturating_sub(n), g.seed).into_iter().take(g.nu).collect();
    let mut rows = 0;
    for c in charts {
        if c.n != n {
            return Err(Error::Shape { left: n, right: c.n });
        }
        for t in linspace(-g.t_half_width, g.t_half_width, g.nt) {
            for s in linspace(0.0, g.sigma_max, g.nsigma) {
                for u in &dirs {
                    let p = chart_point(c, t, s, u)?;
                    let line = p.z.iter().map(|z| format!("{:e},{:e}", z.re, z.im)).collect::<Vec<_>>().join(",");
                    out.push_str(&line);
                    out.push('\n');
                    rows += 1;
                }
            }
        }
    }
    Ok((out, rows))
}

/// Writes the mesh for `charts` to `path`; returns the number of vertices
/// (reduced) or rows (embedded). The `t` grid is clipped to each chart's
/// `t` radius.
pub fn export_mesh(charts: &[Chart], mode: MeshMode, grid: &MeshGrid, path: &Path) -> Result<usize> {
    grid.validate()?;
    if charts.is_empty() {
        return Err(Error::InvalidArgument("no charts to export".into()));
    }
    let rho_t = charts.iter().map(|c| c.radius.rho_t).fold(f64::INFINITY, f64::min);
    let g = MeshGrid { t_half_width: grid.t_half_width.min(0.99 * rho_t), ..*grid };
    let (text, count) = match mode {
        MeshMode::Reduced => reduced_obj(charts, &g)?,
        MeshMode::Embedded => embedded_csv(charts, &g)?,
    };
    write_atomic(path, text.as_bytes())?;
    Ok(count)
}
