//! Convex angles and the quasihyperbolic distance on the punctured plane.

use crate::error::Error;
use crate::Result;
use num_complex::Complex64;

fn check_in_punctured_plane(z: Complex64, which: &str) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::parameter(format!("{which} must be finite")));
    }
    if z.norm() == 0.0 {
        return Err(Error::parameter(format!("{which} must be nonzero")));
    }
    Ok(())
}

/// Measure in [0, pi] of the convex angle at the origin between the rays to
/// `z1` and `z2`. Both points must be finite and nonzero.
pub fn convex_angle(z1: Complex64, z2: Complex64) -> Result<f64> {
    check_in_punctured_plane(z1, "z1")?;
    check_in_punctured_plane(z2, "z2")?;
    // arg(z2 / conj-free quotient) wrapped to [-pi, pi], then folded.
    Ok((z2 * z1.conj()).arg().abs())
}

/// Quasihyperbolic distance on the punctured plane:
/// `sqrt(ln(r2/r1)^2 + theta^2)` with `theta` the convex angle. This is the
/// flat-cylinder distance induced by the density `1/|z|`.
pub fn qh_distance(z1: Complex64, z2: Complex64) -> Result<f64> {
    let theta = convex_angle(z1, z2)?;
    let dr = (z2.norm() / z1.norm()).ln();
    Ok(dr.hypot(theta))
}
