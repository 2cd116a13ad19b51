//! Quasihyperbolic metric on the punctured plane, convex angles, Möbius
//! normalizers, and angle-distortion checks.

mod distortion;
mod metric;
mod mobius;

pub use distortion::{
    check_gehring_osgood, check_x_angle_bound, pull_back_region_through_y, AngleDistortionRecord,
};
pub use metric::{convex_angle, qh_distance};
pub use mobius::{mobius_a0, mobius_a0_inv, mobius_x, mobius_y, MobiusPair};
