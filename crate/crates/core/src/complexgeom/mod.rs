//! Core complex-plane geometry: curves, model regions, isometries, and the
//! curve constant estimators every other subsystem consumes.

mod constants;
mod curve;
mod isometry;
mod point;
mod region;

pub use constants::{estimate_arc_chord, estimate_l1, pair_arc_chord_ratio, second_constant, ConstantEstimates};
pub use curve::{build_gamma_curve, build_graph_curve, SampledCurve};
pub use isometry::{apply_isometry, make_r_a, make_t_b, Isometry};
pub use point::ComplexPoint;
pub use region::{build_elementary_domain, region_contains, ElementaryDomainSpec, LypRegionSpec};
