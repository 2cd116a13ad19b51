//! Möbius normalizers on the extended plane.
//!
//! `MobiusPair` bundles the mutually inverse pair used to move a puncture
//! `p` to infinity and back while fixing the origin:
//!
//! * forward `X_p(z) = p z / (z + p)`, with `X(0) = 0`, `X(-p) = inf`,
//!   `X(inf) = p`;
//! * inverse `Y_p(z) = -p z / (z - p)`, with `Y(0) = 0`, `Y(p) = inf`,
//!   `Y(inf) = -p`.
//!
//! Poles and the point at infinity are handled exactly through the tagged
//! sentinel; no large-float encodings ever appear.

use crate::complexgeom::ComplexPoint;
use crate::error::Error;
use crate::Result;
use num_complex::Complex64;

/// The normalizer pair for a puncture at `p != 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusPair {
    p: Complex64,
}

impl MobiusPair {
    pub fn new(p: Complex64) -> Result<Self> {
        if p.norm() == 0.0 || !p.re.is_finite() || !p.im.is_finite() {
            return Err(Error::parameter("puncture p must be finite and nonzero"));
        }
        Ok(MobiusPair { p })
    }

    pub fn p(&self) -> Complex64 {
        self.p
    }

    /// Forward map sending `inf` to the puncture.
    pub fn x(&self, z: ComplexPoint) -> ComplexPoint {
        mobius_x(self.p, z)
    }

    /// Inverse map sending the puncture to `inf`.
    pub fn y(&self, z: ComplexPoint) -> ComplexPoint {
        mobius_y(self.p, z)
    }

    /// Finite-input convenience for the forward map; errors at the pole.
    pub fn x_finite(&self, z: Complex64) -> Result<Complex64> {
        self.x(z.into())
            .finite()
            .ok_or_else(|| Error::evaluation("argument is the pole of the forward normalizer"))
    }

    /// Finite-input convenience for the inverse map; errors at the pole.
    pub fn y_finite(&self, z: Complex64) -> Result<Complex64> {
        self.y(z.into())
            .finite()
            .ok_or_else(|| Error::evaluation("argument is the pole of the inverse normalizer"))
    }
}

/// `X_p(z) = p z / (z + p)` on the extended plane.
pub fn mobius_x(p: Complex64, z: ComplexPoint) -> ComplexPoint {
    match z {
        ComplexPoint::Infinity => ComplexPoint::Finite(p),
        ComplexPoint::Finite(z) => {
            let den = z + p;
            if den.norm() == 0.0 {
                ComplexPoint::Infinity
            } else {
                ComplexPoint::Finite(p * z / den)
            }
        }
    }
}

/// `Y_p(z) = -p z / (z - p)` on the extended plane.
pub fn mobius_y(p: Complex64, z: ComplexPoint) -> ComplexPoint {
    match z {
        ComplexPoint::Infinity => ComplexPoint::Finite(-p),
        ComplexPoint::Finite(z) => {
            let den = z - p;
            if den.norm() == 0.0 {
                ComplexPoint::Infinity
            } else {
                ComplexPoint::Finite(-p * z / den)
            }
        }
    }
}

/// Half-plane-to-disk map `(4i - z) / (4i + z)`: sends 0 to 1 and -4i to
/// infinity.
pub fn mobius_a0(z: ComplexPoint) -> ComplexPoint {
    let four_i = Complex64::new(0.0, 4.0);
    match z {
        ComplexPoint::Infinity => ComplexPoint::Finite(Complex64::new(-1.0, 0.0)),
        ComplexPoint::Finite(z) => {
            let den = four_i + z;
            if den.norm() == 0.0 {
                ComplexPoint::Infinity
            } else {
                ComplexPoint::Finite((four_i - z) / den)
            }
        }
    }
}

/// Inverse of `mobius_a0`: `w -> 4i (1 - w) / (1 + w)`.
pub fn mobius_a0_inv(w: ComplexPoint) -> ComplexPoint {
    let four_i = Complex64::new(0.0, 4.0);
    match w {
        ComplexPoint::Infinity => ComplexPoint::Finite(-four_i),
        ComplexPoint::Finite(w) => {
            let den = Complex64::new(1.0, 0.0) + w;
            if den.norm() == 0.0 {
                ComplexPoint::Infinity
            } else {
                ComplexPoint::Finite(four_i * (Complex64::new(1.0, 0.0) - w) / den)
            }
        }
    }
}
