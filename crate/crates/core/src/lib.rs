//! Construction and verification of `SO(n)`-invariant special Lagrangian
//! extensions of real-analytic arcs in `C`.
//!
//! The fixed locus of the `SO(n)` action on `C^{n+1}` is the line `C` of the
//! `z0` coordinate. Near an analytic arc `A` in that line, an invariant
//! special Lagrangian is the image of a potential `phi(t, sigma)` even in
//! `sigma`, and `phi` is determined order by order from the arc:
//!
//! * [`series`]: truncated Taylor arithmetic over `f64` or double-double.
//! * [`arc`]: arc input, normalization at a point, winding and holonomy.
//! * [`engine`]: the recursion for `phi`, residuals, hypothesis checks,
//!   radius estimates, charts and atlases.
//! * [`geometry`]: maps into `C^{n+1}`, invariant planes, special Lagrangian
//!   residuals and the `J0` coframe.
//! * [`oracle`]: closed-form ground truths.
//! * [`io`]: run configuration, chart documents, meshes and reports.

pub mod arc;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod series;

pub use arc::{existence_gate, load_arc, normalize_at, rotation_number, ArcSpec, Frame, Gate, NormalizedArc};
pub use engine::{build_atlas, extend_series, Chart, RadiusEstimate, ResidualReport};
pub use error::{Error, Result};
pub use geometry::{chart_point, AmbientPoint, PlaneP};
pub use series::{Real, SigmaExpansion, TaylorPoly, TwoFloat};
