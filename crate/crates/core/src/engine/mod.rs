//! Formal extension of arc data into a special Lagrangian germ.

mod atlas;
mod chart;
mod gt;
mod radius;
mod recursion;
mod residual;
mod stage;

pub(crate) use residual::linspace;

pub use atlas::{atlas_centers, build_atlas, overlap_agreement};
pub use chart::Chart;
pub use gt::{gt_hypotheses_check, GtOptions, GtReport, FD_STEPS, Z_LABELS};
pub use radius::{estimate_radius, t_radius, RadiusEstimate, DEFAULT_TAU};
pub use recursion::{extend_series, linearity_probe, sigma_residual_coefficient, LinearityProbe};
pub use residual::{pde_residual, pde_value, pde_value_reduced, reduced_pde_residual, ResidualGrid, ResidualReport};
pub use stage::{check_normalized, compute_f1, compute_r, r_series, NORMALIZATION_TOL};
