use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree caps differ: {left} vs {right}")]
    Shape { left: usize, right: usize },

    #[error("series has zero constant term and cannot be inverted")]
    SingularDivision,

    #[error("composition needs inner(0) = 0, found {0:e}")]
    CompositionDomain(f64),

    #[error("series reversion needs a(0) = 0 and a'(0) != 0")]
    NonInvertible,

    #[error("normalization violated: {0}")]
    Normalization(String),

    #[error("truncation exhausted: {0}")]
    Truncation(String),

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid arc: {0}")]
    InvalidArc(String),

    #[error("parametrization is singular near s = {0}")]
    SingularParametrization(f64),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("resolution too coarse: {0}")]
    Resolution(String),

    #[error("no global extension: holonomy shifts the branch by {shift} (mod {n})")]
    Obstruction { shift: usize, n: usize },

    #[error("atlas does not cover the arc: {0}")]
    Coverage(String),

    #[error("point (t = {t:e}, sigma = {sigma:e}) is outside the chart domain")]
    OutsideDomain { t: f64, sigma: f64 },

    #[error("direction vector is not a unit vector (|u| = {0})")]
    NonUnit(f64),

    #[error("point lies on the singular locus zeta = 0")]
    SingularLocus,

    #[error("tangent frame is degenerate")]
    Degenerate,

    #[error("chart domains do not overlap")]
    Disjoint,

    #[error("schema error: {0}")]
    Schema(String),

    #[error("unsupported document version {found}, expected {expected}")]
    Version { found: u64, expected: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
