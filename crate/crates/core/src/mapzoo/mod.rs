//! A catalogue of evaluable planar maps with derivative and dilatation
//! machinery.

mod analytic;
mod boundary;
mod handle;
mod poisson;
mod theodorsen;

pub use analytic::{
    compose, make_angular_stretch, make_disk_automorphism, make_half_plane_to_disk, make_identity,
    make_log_quotient, make_mobius_x_handle, make_mobius_y_handle, make_radial_stretch,
};
pub use boundary::{BoundaryFunction, Interp};
pub use handle::{dilatation_at, dilatation_scan, DilatationSample, DilatationScan, DomainTag, MapHandle};
pub use poisson::poisson_extend;
pub use theodorsen::{theodorsen_conformal, TheodorsenReport};
