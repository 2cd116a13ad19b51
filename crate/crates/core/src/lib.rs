//! Numerical toolkit for planar geometric function theory.
//!
//! The crate is organized around four subsystems:
//!
//! * [`complexgeom`] — sampled curves, two-cusp model regions and their
//!   elementary (cusp-free) subdomains, plane isometries, and the curve
//!   constant estimators (tangent Hölder constant, arc-chord constant).
//! * [`qhyperbolic`] — the quasihyperbolic metric on the punctured plane,
//!   convex angles, Möbius normalizers, and angle-distortion records.
//! * [`mapzoo`] — a catalogue of evaluable planar maps (model stretches,
//!   Poisson harmonic extensions, a numeric Riemann map) with Wirtinger
//!   derivative and dilatation machinery.
//! * [`verifier`] — sampled verification of inequality- and inclusion-shaped
//!   statements: Hölder bounds, boundary argument bounds, region inclusion
//!   chains, Harnack-type lower bounds, and co-Lipschitz scans.
//!
//! All verdicts produced here are sampling evidence, not proofs. Estimators
//! over discretized curves are lower bounds of the corresponding suprema and
//! converge as the sampling refines.

pub mod complexgeom;
pub mod error;
pub mod mapzoo;
pub mod numerics;
pub mod qhyperbolic;
pub mod verifier;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
