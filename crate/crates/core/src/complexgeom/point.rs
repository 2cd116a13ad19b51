//! Points of the extended plane.

use num_complex::Complex64;
use std::f64::consts::PI;

/// A point of the extended complex plane. Infinity is a distinct tagged
/// value; it is never encoded as large floats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComplexPoint {
    Finite(Complex64),
    Infinity,
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexPoint::Finite(Complex64::new(re, im))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ComplexPoint::Infinity)
    }

    /// Finite value, if any.
    pub fn finite(&self) -> Option<Complex64> {
        match self {
            ComplexPoint::Finite(z) => Some(*z),
            ComplexPoint::Infinity => None,
        }
    }

    /// Distance in the plane; infinite if exactly one side is the sentinel,
    /// zero if both are.
    pub fn dist(&self, other: &ComplexPoint) -> f64 {
        match (self, other) {
            (ComplexPoint::Finite(a), ComplexPoint::Finite(b)) => (a - b).norm(),
            (ComplexPoint::Infinity, ComplexPoint::Infinity) => 0.0,
            _ => f64::INFINITY,
        }
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        ComplexPoint::Finite(z)
    }
}

/// Principal argument in (-pi, pi].
pub fn arg_principal(z: Complex64) -> f64 {
    z.im.atan2(z.re)
}

/// Argument on the branch (-pi/2, 3*pi/2). This is the branch used by the
/// model-region membership predicates; everything else uses the principal
/// branch.
pub fn arg_upper(z: Complex64) -> f64 {
    let a = arg_principal(z);
    if a <= -PI / 2.0 {
        a + 2.0 * PI
    } else {
        a
    }
}
