//! Curve constant estimators: the tangent Hölder constant, the arc-chord
//! constant, and the derived opening constant.
//!
//! All estimators run over sampled polylines, so they are lower bounds of
//! the continuum suprema and nondecreasing under sample refinement.

use super::curve::SampledCurve;
use crate::error::Error;
use crate::Result;
use std::f64::consts::FRAC_PI_2;

/// Bundle of estimated curve constants. `l2` is derived, never stored
/// independently of the `mu` used at estimation time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantEstimates {
    pub l1: f64,
    pub b_arc: f64,
    pub l2: f64,
    pub mu: f64,
    /// Number of curve samples the estimates were computed from.
    pub samples: usize,
}

impl ConstantEstimates {
    /// Estimate all three constants from one curve.
    pub fn from_curve(curve: &SampledCurve, mu: f64) -> Result<Self> {
        let l1 = estimate_l1(curve, mu)?;
        let b_arc = estimate_arc_chord(curve)?;
        Ok(ConstantEstimates {
            l1,
            b_arc,
            l2: second_constant(l1, b_arc, mu)?,
            mu,
            samples: curve.len(),
        })
    }
}

/// Largest sampled tangent Hölder quotient
/// `|g'(t) - g'(s)| / |t - s|^mu` over all pairs of samples, with tangents
/// from central differences in arc length.
pub fn estimate_l1(curve: &SampledCurve, mu: f64) -> Result<f64> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::parameter("mu must lie in (0,1)"));
    }
    if curve.len() < 3 {
        return Err(Error::data("need at least 3 samples to estimate tangents"));
    }
    let tangents = curve.tangents();
    let s = curve.cum_length();
    let mut best = 0.0f64;
    for i in 0..tangents.len() {
        for j in (i + 1)..tangents.len() {
            let dt = s[j] - s[i];
            let q = (tangents[j] - tangents[i]).norm() / dt.powf(mu);
            if q > best {
                best = q;
            }
        }
    }
    Ok(best)
}

/// Arc-chord ratio of the pair `(i, j)` of a closed curve: the shorter of
/// the two connecting arcs divided by the chord.
pub fn pair_arc_chord_ratio(curve: &SampledCurve, i: usize, j: usize) -> Result<f64> {
    if !curve.is_closed() {
        return Err(Error::data("pair arc-chord ratio is defined for closed curves"));
    }
    let s = curve.cum_length();
    let total = curve.total_length();
    let chord = (curve.points()[i] - curve.points()[j]).norm();
    if chord == 0.0 {
        return Err(Error::data("coincident sample points"));
    }
    let arc = (s[i.max(j)] - s[i.min(j)]).abs();
    Ok(arc.min(total - arc) / chord)
}

/// Arc-chord constant estimate.
///
/// Closed curves: max over all sample pairs of (shorter arc)/(chord).
/// Open curves: the at-a-point variant anchored at the first sample.
/// Always at least 1 for the pairs considered (arc >= chord).
pub fn estimate_arc_chord(curve: &SampledCurve) -> Result<f64> {
    let pts = curve.points();
    let s = curve.cum_length();
    let mut best = 1.0f64;
    if curve.is_closed() {
        let total = curve.total_length();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let chord = (pts[i] - pts[j]).norm();
                if chord == 0.0 {
                    return Err(Error::data("coincident sample points"));
                }
                let arc = s[j] - s[i];
                let q = arc.min(total - arc) / chord;
                if q > best {
                    best = q;
                }
            }
        }
    } else {
        for j in 1..pts.len() {
            let chord = (pts[j] - pts[0]).norm();
            if chord == 0.0 {
                return Err(Error::data("coincident sample points"));
            }
            let q = s[j] / chord;
            if q > best {
                best = q;
            }
        }
    }
    Ok(best)
}

/// The derived opening constant `(pi/2) * l1 * b_arc^(1+mu)`.
pub fn second_constant(l1: f64, b_arc: f64, mu: f64) -> Result<f64> {
    if !(l1 >= 0.0) {
        return Err(Error::parameter("l1 must be nonnegative"));
    }
    if !(b_arc >= 1.0) {
        return Err(Error::parameter("arc-chord constant must be at least 1"));
    }
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::parameter("mu must lie in (0,1)"));
    }
    Ok(FRAC_PI_2 * l1 * b_arc.powf(1.0 + mu))
}
