//! Angle-distortion records and sampling-based distortion checks.

use super::metric::convex_angle;
use super::mobius::MobiusPair;
use crate::complexgeom::LypRegionSpec;
use crate::error::Error;
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::PI;

/// One angle-distortion comparison: an input convex angle, its image, and a
/// bound of the form `c * max(theta^alpha, theta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleDistortionRecord {
    pub theta: f64,
    pub theta_star: f64,
    pub bound: f64,
    pub alpha: f64,
    pub c_used: f64,
    /// Smallest constant that would make the bound hold; infinite when
    /// `theta = 0` but `theta_star > 0`.
    pub tightest_c: f64,
    pub satisfied: bool,
}

impl AngleDistortionRecord {
    /// Margin of the bound (bound minus observed image angle).
    pub fn margin(&self) -> f64 {
        self.bound - self.theta_star
    }
}

/// Fill a distortion record for the bound `theta* <= c * max(theta^alpha,
/// theta)` and extract the empirically tightest constant.
pub fn check_gehring_osgood(theta: f64, theta_star: f64, c: f64, alpha: f64) -> Result<AngleDistortionRecord> {
    if !(0.0..=PI).contains(&theta) || !(0.0..=PI).contains(&theta_star) {
        return Err(Error::parameter("angles must lie in [0, pi]"));
    }
    if !(c > 0.0) {
        return Err(Error::parameter("constant c must be positive"));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::parameter("alpha must lie in (0, 1]"));
    }
    let gauge = theta.powf(alpha).max(theta);
    let bound = c * gauge;
    let tightest_c = if gauge > 0.0 {
        theta_star / gauge
    } else if theta_star > 0.0 {
        f64::INFINITY
    } else {
        0.0
    };
    Ok(AngleDistortionRecord {
        theta,
        theta_star,
        bound,
        alpha,
        c_used: c,
        tightest_c,
        satisfied: theta_star <= bound,
    })
}

/// Verify the linear angle bound for the forward normalizer on an
/// equal-radius pair: `theta(X z1, X z2) <= (1 + 2/|p|) * theta(z1, z2)`.
///
/// Preconditions: `|z1| = |z2|` within 1e-9 relative and `|z1| < |p|/2`.
/// The record's margin reports how much slack the bound had (negative when
/// violated).
pub fn check_x_angle_bound(p: Complex64, z1: Complex64, z2: Complex64) -> Result<AngleDistortionRecord> {
    let pair = MobiusPair::new(p)?;
    let r0 = p.norm() / 2.0;
    let (r1, r2) = (z1.norm(), z2.norm());
    if (r1 - r2).abs() > 1e-9 * r1.max(r2) {
        return Err(Error::precondition("pair must have equal radii", z1));
    }
    if r1 >= r0 {
        return Err(Error::precondition("pair must satisfy |z| < |p|/2", z1));
    }
    let theta = convex_angle(z1, z2)?;
    let factor = 1.0 + 1.0 / r0;
    if theta == 0.0 {
        return Ok(AngleDistortionRecord {
            theta,
            theta_star: 0.0,
            bound: 0.0,
            alpha: 1.0,
            c_used: factor,
            tightest_c: 0.0,
            satisfied: true,
        });
    }
    let w1 = pair.x_finite(z1)?;
    let w2 = pair.x_finite(z2)?;
    let theta_star = convex_angle(w1, w2)?;
    Ok(AngleDistortionRecord {
        theta,
        theta_star,
        bound: factor * theta,
        alpha: 1.0,
        c_used: factor,
        tightest_c: theta_star / theta,
        satisfied: theta_star <= factor * theta,
    })
}

/// Search for a model region whose image under the inverse normalizer lands
/// inside `target`.
///
/// Keeps the target's exponent, and alternately doubles the opening constant
/// and shrinks the radius (gentle 0.95 steps so the returned radius stays
/// close to the target's when the normalizer is near the identity), until a
/// dense sample of the candidate maps strictly inside the target. Bounded at
/// 60 iterations.
pub fn pull_back_region_through_y(p: Complex64, target: &LypRegionSpec) -> Result<LypRegionSpec> {
    let pair = MobiusPair::new(p)?;
    if !(target.eps() < p.norm() / 2.0) {
        return Err(Error::parameter("target radius must be below |p|/2"));
    }

    let mu1 = target.mu();
    let mut eps1 = target.eps();
    let mut c1 = target.c();

    let mut last_violation = Complex64::new(0.0, 0.0);
    for iter in 0..=60 {
        if let Ok(candidate) = LypRegionSpec::new(eps1, c1, mu1) {
            match first_escaping_sample(&pair, &candidate, target) {
                None => return Ok(candidate),
                Some(w) => last_violation = w,
            }
        }
        // Alternate: grow the opening constant first (clears the cusp
        // boundary), then shrink the radius (clears the outer arc).
        if iter % 2 == 0 {
            let doubled = 2.0 * c1;
            if doubled * eps1.powf(mu1) < 0.999 * PI / 2.0 {
                c1 = doubled;
            } else {
                eps1 *= 0.95;
            }
        } else {
            eps1 *= 0.95;
        }
    }
    Err(Error::Precondition {
        what: "pull-back search exhausted its iteration budget; last violating sample attached".into(),
        witness: last_violation,
    })
}

/// First sampled point of `candidate` (boundary and interior) whose image
/// under the inverse normalizer is not strictly inside `target`.
fn first_escaping_sample(pair: &MobiusPair, candidate: &LypRegionSpec, target: &LypRegionSpec) -> Option<Complex64> {
    let boundary = candidate.boundary_curve(2048);
    for &z in boundary.points() {
        if z.norm() == 0.0 {
            continue;
        }
        match pair.y_finite(z) {
            Ok(w) => {
                if !target.contains(w) {
                    return Some(z);
                }
            }
            Err(_) => return Some(z),
        }
    }
    for z in candidate.interior_sample(4096, 0x9e3779b9) {
        match pair.y_finite(z) {
            Ok(w) => {
                if !target.contains(w) {
                    return Some(z);
                }
            }
            Err(_) => return Some(z),
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gehring_osgood_identity_case() {
        let rec = check_gehring_osgood(0.5, 0.5, 1.0, 1.0).unwrap();
        assert!(rec.satisfied);
        assert_relative_eq!(rec.tightest_c, 1.0);
        // For theta <= 1 the gauge is theta^alpha.
        let rec = check_gehring_osgood(0.25, 0.3, 2.0, 0.5).unwrap();
        assert_relative_eq!(rec.bound, 2.0 * 0.25f64.powf(0.5));
    }

    #[test]
    fn gehring_osgood_unsatisfiable_at_zero() {
        let rec = check_gehring_osgood(0.0, 0.2, 1.0, 0.5).unwrap();
        assert!(!rec.satisfied);
        assert!(rec.tightest_c.is_infinite());
    }

    #[test]
    fn identity_map_tightest_c_is_one_across_angles() {
        for i in 1..=100 {
            let theta = PI * i as f64 / 100.0;
            let rec = check_gehring_osgood(theta, theta, 1.0, 1.0).unwrap();
            assert_relative_eq!(rec.tightest_c, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn x_angle_bound_small_radius_example() {
        // Small radius relative to |p|: the linear bound holds.
        let p = Complex64::new(0.0, 4.0);
        let z1 = Complex64::new(0.1, 0.0);
        let z2 = Complex64::from_polar(0.1, 0.3);
        let rec = check_x_angle_bound(p, z1, z2).unwrap();
        assert!(rec.satisfied, "theta*={} bound={}", rec.theta_star, rec.bound);
        assert!(rec.theta_star <= 1.5 * 0.3);
    }

    #[test]
    fn x_angle_bound_degenerate_pair() {
        let p = Complex64::new(0.0, 4.0);
        let z = Complex64::new(0.3, 0.2);
        let rec = check_x_angle_bound(p, z, z).unwrap();
        assert_eq!(rec.theta, 0.0);
        assert_eq!(rec.theta_star, 0.0);
        assert!(rec.satisfied);
    }

    #[test]
    fn x_angle_bound_conjugation_symmetry() {
        // Real p commutes with conjugation, so conjugate pairs see symmetric
        // images.
        let p = Complex64::new(-5.0, 0.0);
        let pair = MobiusPair::new(p).unwrap();
        let z1 = Complex64::from_polar(0.4, 0.7);
        let z2 = z1.conj();
        let w1 = pair.x_finite(z1).unwrap();
        let w2 = pair.x_finite(z2).unwrap();
        assert!((w1.conj() - w2).norm() < 1e-14);
    }

    #[test]
    fn x_angle_bound_rejects_bad_preconditions() {
        let p = Complex64::new(0.0, 4.0);
        assert!(check_x_angle_bound(p, Complex64::new(0.1, 0.0), Complex64::new(0.2, 0.0)).is_err());
        assert!(check_x_angle_bound(p, Complex64::new(3.0, 0.0), Complex64::from_polar(3.0, 0.1)).is_err());
    }

    #[test]
    fn pull_back_returns_admissible_region() {
        let target = LypRegionSpec::new(0.2, 1.0, 0.5).unwrap();
        let p = Complex64::new(0.0, 2.0);
        let h0 = pull_back_region_through_y(p, &target).unwrap();
        assert!(h0.c() * h0.eps().powf(h0.mu()) < PI / 2.0);
        assert_eq!(h0.mu(), target.mu());
    }

    #[test]
    fn pull_back_near_identity_keeps_radius() {
        // For a very distant puncture the inverse normalizer is near the
        // identity and the returned radius stays within 10% of the target's.
        let target = LypRegionSpec::new(0.25, 1.0, 0.5).unwrap();
        let p = Complex64::new(0.0, 1000.0);
        let h0 = pull_back_region_through_y(p, &target).unwrap();
        assert!(
            h0.eps() >= 0.9 * target.eps(),
            "returned radius {} dropped more than 10% below {}",
            h0.eps(),
            target.eps()
        );
    }

    #[test]
    fn pull_back_result_maps_strictly_inside() {
        let target = LypRegionSpec::new(0.2, 1.0, 0.5).unwrap();
        let p = Complex64::new(1.0, 2.0);
        let pair = MobiusPair::new(p).unwrap();
        let h0 = pull_back_region_through_y(p, &target).unwrap();
        for &z in h0.boundary_curve(1024).points() {
            if z.norm() == 0.0 {
                continue;
            }
            let w = pair.y_finite(z).unwrap();
            assert!(target.contains(w), "boundary image {w} escaped the target");
        }
    }
}
