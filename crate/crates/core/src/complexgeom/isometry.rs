//! Orientation-preserving plane isometries (rotation + translation).

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

/// `z -> e^{i rotation} z + translation`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    pub rotation: f64,
    pub translation: Complex64,
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            rotation: 0.0,
            translation: Complex64::new(0.0, 0.0),
        }
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        Complex64::from_polar(1.0, self.rotation) * z + self.translation
    }

    /// `self` after `other`: (self ∘ other)(z) = self(other(z)).
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            rotation: self.rotation + other.rotation,
            translation: Complex64::from_polar(1.0, self.rotation) * other.translation + self.translation,
        }
    }

    pub fn inverse(&self) -> Isometry {
        let rot = Complex64::from_polar(1.0, -self.rotation);
        Isometry {
            rotation: -self.rotation,
            translation: -(rot * self.translation),
        }
    }
}

/// Rotation about the origin by `alpha`.
pub fn make_r_a(alpha: f64) -> Isometry {
    Isometry {
        rotation: alpha,
        translation: Complex64::new(0.0, 0.0),
    }
}

/// The boundary normalizer `w -> -i e^{i beta} w + b`: sends 0 to the
/// boundary point `b` and the upward direction `i` to the unit inner normal
/// `e^{i beta}` at `b`.
pub fn make_t_b(b: Complex64, beta: f64) -> Isometry {
    Isometry {
        rotation: beta - FRAC_PI_2,
        translation: b,
    }
}

pub fn apply_isometry(iso: &Isometry, z: Complex64) -> Complex64 {
    iso.apply(z)
}
