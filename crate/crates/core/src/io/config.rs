//! Run configuration shared by the command-line tools.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable selecting the series precision.
pub const PRECISION_ENV: &str = "SLAG_PRECISION";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    #[default]
    Double,
    /// Double-double (about 32 digits).
    Extended,
}

impl Precision {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "double" | "f64" => Ok(Self::Double),
            "extended" | "double-double" | "dd" => Ok(Self::Extended),
            other => Err(Error::InvalidArgument(format!("unknown precision {other:?}"))),
        }
    }

    /// Reads [`PRECISION_ENV`]; unset means double.
    pub fn from_env() -> Result<Self> {
        match std::env::var(PRECISION_ENV) {
            Ok(v) => Self::parse(&v),
            Err(_) => Ok(Self::Double),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub n: usize,
    /// Truncation order `K` in `sigma^(2K)`.
    pub order: usize,
    /// `t`-degree cap `D`.
    pub degree_cap: usize,
    pub sigma_max: f64,
    pub spacing: f64,
    pub branch: usize,
    pub seed: u64,
    pub precision: Precision,
    /// Replaces the default tolerance of every check in a run.
    pub tolerance: Option<f64>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n: 2,
            order: 8,
            degree_cap: 24,
            sigma_max: 0.05,
            spacing: std::f64::consts::PI / 6.0,
            branch: 0,
            seed: 0,
            precision: Precision::Double,
            tolerance: None,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.n < 2 {
            return bad(format!("n must be at least 2, got {}", self.n));
        }
        if self.order < 1 {
            return bad("K must be at least 1".into());
        }
        if self.degree_cap < 2 * self.order {
            return bad(format!("D = {} must be at least 2K = {}", self.degree_cap, 2 * self.order));
        }
        if self.branch >= self.n {
            return bad(format!("branch {} outside [0, {})", self.branch, self.n));
        }
        if !(self.sigma_max.is_finite() && self.sigma_max > 0.0) {
            return bad(format!("sigma_max must be positive, got {}", self.sigma_max));
        }
        if !(self.spacing.is_finite() && self.spacing > 0.0) {
            return bad(format!("spacing must be positive, got {}", self.spacing));
        }
        if let Some(t) = self.tolerance {
            if !(t.is_finite() && t >= 0.0) {
                return bad(format!("tolerance must be non-negative, got {t}"));
            }
        }
        Ok(())
    }

    /// The override if set, else `default`.
    pub fn tol(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }
}
