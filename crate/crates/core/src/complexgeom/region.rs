//! Two-cusp model regions and their elementary (cusp-free) subdomains.
//!
//! The model region with opening constant `c`, exponent `mu` and radius
//! `eps` is `{ w : c|w|^mu < arg(w) < pi - c|w|^mu, |w| < eps }`, the set
//! pinched between the two branches of the polar cusp curve. The elementary
//! subdomain replaces the cusps by an inscribed circle tangent to both
//! branches, leaving a convex region with no cusps.

use super::curve::{check_cusp_params, SampledCurve};
use super::point::arg_upper;
use crate::error::Error;
use crate::numerics;
use crate::Result;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Parameters of the two-cusp model region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LypRegionSpec {
    eps: f64,
    c: f64,
    mu: f64,
}

impl LypRegionSpec {
    /// Validates positivity, `mu` in (0,1), and `c * eps^mu < pi/2`.
    pub fn new(eps: f64, c: f64, mu: f64) -> Result<Self> {
        check_cusp_params(c, mu)?;
        if !(eps > 0.0) || !eps.is_finite() {
            return Err(Error::parameter("eps must be positive"));
        }
        if c * eps.powf(mu) >= PI / 2.0 {
            return Err(Error::parameter(format!(
                "inadmissible region: c*eps^mu = {} >= pi/2",
                c * eps.powf(mu)
            )));
        }
        Ok(LypRegionSpec { eps, c, mu })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Strict membership. The vertex `w = 0` is excluded: the defining
    /// inequalities are strict and unsatisfiable there.
    pub fn contains(&self, w: Complex64) -> bool {
        region_contains(self, w)
    }

    /// Membership of the closure, with an absolute slack for sampled data.
    pub fn contains_closure(&self, w: Complex64, tol: f64) -> bool {
        let r = w.norm();
        if r > self.eps + tol {
            return false;
        }
        if r == 0.0 {
            return true;
        }
        let a = arg_upper(w);
        let gate = self.c * r.powf(self.mu);
        a >= gate - tol && a <= PI - gate + tol
    }

    /// Signed interior margin: the smallest slack among the three defining
    /// inequalities (radial in length units, angular in radians). Positive
    /// means strictly inside.
    pub fn margin(&self, w: Complex64) -> f64 {
        let r = w.norm();
        if r == 0.0 {
            return 0.0;
        }
        let a = arg_upper(w);
        let gate = self.c * r.powf(self.mu);
        (self.eps - r).min(a - gate).min(PI - gate - a)
    }

    /// Positively oriented boundary: right branch outward from the vertex,
    /// the outer circular arc, then the left branch back in. `n` is the
    /// per-piece sample count.
    pub fn boundary_curve(&self, n: usize) -> SampledCurve {
        let n = n.max(8);
        let mut pts = Vec::with_capacity(3 * n + 1);
        pts.push(Complex64::new(0.0, 0.0));
        for i in 1..=n {
            let r = self.eps * i as f64 / n as f64;
            pts.push(Complex64::from_polar(r, self.c * r.powf(self.mu)));
        }
        let a0 = self.c * self.eps.powf(self.mu);
        for i in 1..n {
            let a = a0 + (PI - 2.0 * a0) * i as f64 / n as f64;
            pts.push(Complex64::from_polar(self.eps, a));
        }
        for i in (1..=n).rev() {
            let r = self.eps * i as f64 / n as f64;
            pts.push(Complex64::from_polar(r, PI - self.c * r.powf(self.mu)));
        }
        SampledCurve::new(pts, true).expect("region boundary samples are distinct")
    }

    /// Deterministic quasi-uniform interior cloud (seeded rejection sampling
    /// in the bounding half-disk box).
    pub fn interior_sample(&self, n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(n);
        let mut guard = 0usize;
        while out.len() < n && guard < 1000 * n + 10_000 {
            guard += 1;
            let x = rng.random_range(-self.eps..self.eps);
            let y = rng.random_range(0.0..self.eps);
            let w = Complex64::new(x, y);
            if self.contains(w) {
                out.push(w);
            }
        }
        out
    }

    /// Flat key-value serialization (`eps=`, `c=`, `mu=`).
    pub fn to_kv(&self) -> String {
        format!("eps={}\nc={}\nmu={}\n", self.eps, self.c, self.mu)
    }

    pub fn from_kv(text: &str) -> Result<Self> {
        let mut eps = None;
        let mut c = None;
        let mut mu = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got '{line}'")))?;
            let val: f64 = v
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad value for {k}: {e}")))?;
            match k.trim() {
                "eps" => eps = Some(val),
                "c" => c = Some(val),
                "mu" => mu = Some(val),
                other => return Err(Error::Parse(format!("unknown key '{other}'"))),
            }
        }
        match (eps, c, mu) {
            (Some(e), Some(c), Some(m)) => LypRegionSpec::new(e, c, m),
            _ => Err(Error::Parse("missing one of eps, c, mu".into())),
        }
    }
}

/// Strict membership in the model region. Uses the argument branch
/// (-pi/2, 3pi/2); the vertex returns false.
pub fn region_contains(spec: &LypRegionSpec, w: Complex64) -> bool {
    let r = w.norm();
    if r == 0.0 || r >= spec.eps {
        return false;
    }
    let a = arg_upper(w);
    let gate = spec.c * r.powf(spec.mu);
    a > gate && a < PI - gate
}

/// An elementary (cusp-free) subdomain: the region enclosed between the cusp
/// curve and the upper arc of an inscribed circle tangent to both branches.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementaryDomainSpec {
    region: LypRegionSpec,
    circle_center_v: f64,
    circle_radius: f64,
    touch_points: (Complex64, Complex64),
}

impl ElementaryDomainSpec {
    pub fn region(&self) -> &LypRegionSpec {
        &self.region
    }

    pub fn circle_center_v(&self) -> f64 {
        self.circle_center_v
    }

    pub fn circle_radius(&self) -> f64 {
        self.circle_radius
    }

    /// Touch points `(w1, w2)` with `Re w1 < Re w2`.
    pub fn touch_points(&self) -> (Complex64, Complex64) {
        self.touch_points
    }

    fn center(&self) -> Complex64 {
        Complex64::new(0.0, self.circle_center_v)
    }

    /// Height of the cusp-curve branch above `|x|`, solved from the polar
    /// form by a short Newton iteration.
    fn branch_height(&self, x: f64) -> f64 {
        let x = x.abs();
        if x == 0.0 {
            return 0.0;
        }
        let (c, mu) = (self.region.c, self.region.mu);
        let mut rho = x;
        for _ in 0..30 {
            let phi = c * rho.powf(mu);
            let f = rho * phi.cos() - x;
            let df = phi.cos() - rho * phi.sin() * c * mu * rho.powf(mu - 1.0);
            let step = f / df;
            rho -= step;
            if step.abs() < 1e-15 * rho.max(1e-300) {
                break;
            }
        }
        rho * (c * rho.powf(mu)).sin()
    }

    /// Membership: inside the inscribed circle, or in one of the slivers
    /// between a branch and the circle's lower arc.
    pub fn contains(&self, q: Complex64) -> bool {
        if q.im <= 0.0 {
            return false;
        }
        let d = (q - self.center()).norm();
        if d < self.circle_radius {
            return true;
        }
        let u2 = self.touch_points.1.re;
        if q.re.abs() >= u2 {
            return false;
        }
        let lower = self.circle_center_v - (self.circle_radius.powi(2) - q.re * q.re).sqrt();
        q.im < lower && q.im > self.branch_height(q.re)
    }

    /// Signed distance-style margin: positive inside, measured as distance to
    /// the boundary polyline (at the given resolution).
    pub fn margin(&self, q: Complex64, boundary_n: usize) -> f64 {
        let b = self.boundary_curve(boundary_n);
        let d = b.distance_to(q);
        if self.contains(q) {
            d
        } else {
            -d
        }
    }

    /// Positively oriented closed boundary: the curve piece from `w1` through
    /// the vertex to `w2`, then the upper circle arc back to `w1`. `n` is the
    /// per-piece sample count.
    pub fn boundary_curve(&self, n: usize) -> SampledCurve {
        let n = n.max(8);
        let (c, mu) = (self.region.c, self.region.mu);
        let t2 = self.touch_points.1.norm();
        let mut pts = Vec::with_capacity(3 * n + 2);
        // Left branch from w1 in to the vertex.
        for i in (1..=n).rev() {
            let r = t2 * i as f64 / n as f64;
            pts.push(Complex64::from_polar(r, PI - c * r.powf(mu)));
        }
        pts.push(Complex64::new(0.0, 0.0));
        // Right branch out to w2.
        for i in 1..=n {
            let r = t2 * i as f64 / n as f64;
            pts.push(Complex64::from_polar(r, c * r.powf(mu)));
        }
        // Upper circle arc from w2 around through the top to w1. The "upper"
        // arc is the one whose midpoint has the larger imaginary part.
        let a2 = (self.touch_points.1 - self.center()).arg();
        let a1 = PI - a2;
        for i in 1..n {
            let a = a2 + (a1 - a2) * i as f64 / n as f64;
            pts.push(self.center() + Complex64::from_polar(self.circle_radius, a));
        }
        SampledCurve::new(pts, true).expect("elementary boundary samples are distinct")
    }

    /// Deterministic seeded interior cloud.
    pub fn interior_sample(&self, n: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = self.circle_radius;
        let top = self.circle_center_v + r;
        let mut out = Vec::with_capacity(n);
        let mut guard = 0usize;
        while out.len() < n && guard < 1000 * n + 10_000 {
            guard += 1;
            let x = rng.random_range(-r..r);
            let y = rng.random_range(0.0..top);
            let q = Complex64::new(x, y);
            if self.contains(q) {
                out.push(q);
            }
        }
        out
    }

    /// Flat key-value serialization.
    pub fn to_kv(&self) -> String {
        format!(
            "eps={}\nc={}\nmu={}\ncircle_center_v={}\ncircle_radius={}\ntouch1_re={}\ntouch1_im={}\ntouch2_re={}\ntouch2_im={}\n",
            self.region.eps,
            self.region.c,
            self.region.mu,
            self.circle_center_v,
            self.circle_radius,
            self.touch_points.0.re,
            self.touch_points.0.im,
            self.touch_points.1.re,
            self.touch_points.1.im,
        )
    }
}

/// Tangency circle data for a touch parameter `t` on the right branch:
/// the inward normal at the branch point meets the imaginary axis at the
/// center `(0, v)`; `r` is the distance from the center to the branch point.
fn touch_circle(c: f64, mu: f64, t: f64) -> Option<(f64, f64, Complex64)> {
    let phi = c * t.powf(mu);
    let w = Complex64::from_polar(t, phi);
    let vel = Complex64::from_polar(1.0, phi) * Complex64::new(1.0, c * mu * t.powf(mu));
    let tangent = vel / vel.norm();
    let normal = Complex64::new(0.0, 1.0) * tangent;
    if normal.re >= 0.0 {
        return None;
    }
    let s = -w.re / normal.re;
    let center = w + normal * s;
    if center.im <= 0.0 || s <= 0.0 {
        return None;
    }
    Some((center.im, s, w))
}

/// Largest inscribed tangency circle whose elementary domain stays inside the
/// model region `Lyp(eps, c, mu)`: outer bisection on the circle radius with
/// an inner Newton solve for the touch parameter.
pub fn build_elementary_domain(c: f64, mu: f64, eps: f64) -> Result<ElementaryDomainSpec> {
    let region = LypRegionSpec::new(eps, c, mu)?;

    // Touch parameters range over (0, t_hi): inside the branch cap and the
    // region radius.
    let t_cap = (PI / (2.0 * c)).powf(1.0 / mu);
    let t_hi = 0.999 * t_cap.min(eps);
    let t_lo = t_hi * 1e-9;

    let radius_at = |t: f64| touch_circle(c, mu, t).map(|(_, r, _)| r);
    let r_lo = radius_at(t_lo)
        .ok_or_else(|| Error::numeric("tangency normal construction failed near the vertex", t_lo))?;
    let r_hi = radius_at(t_hi)
        .ok_or_else(|| Error::numeric("tangency normal construction failed at the branch cap", t_hi))?;

    let solve_t = |r: f64| -> Result<f64> {
        // Relative residual, with the small-parameter asymptotic
        // t ~ (c (1+mu) r)^(1/(1-mu)) as the Newton start.
        let resid = |t: f64| radius_at(t).map(|rt| rt / r - 1.0).unwrap_or(f64::NAN);
        let start = (c * (1.0 + mu) * r).powf(1.0 / (1.0 - mu)).clamp(t_lo, t_hi);
        numerics::newton(start, t_lo, t_hi, 1e-12, 200, resid, |t| {
            let h = 1e-7 * t;
            let lo = (t - h).max(t_lo * 0.5);
            let hi = (t + h).min(t_hi * 1.5);
            (resid(hi) - resid(lo)) / (hi - lo)
        })
    };

    let arc_inside = |t: f64| -> bool {
        let Some((v, r, w2)) = touch_circle(c, mu, t) else {
            return false;
        };
        let center = Complex64::new(0.0, v);
        let a2 = (w2 - center).arg();
        let a1 = PI - a2;
        const ARC_SAMPLES: usize = 512;
        for i in 0..=ARC_SAMPLES {
            let a = a2 + (a1 - a2) * i as f64 / ARC_SAMPLES as f64;
            let q = center + Complex64::from_polar(r, a);
            if !region.contains_closure(q, 1e-9) {
                return false;
            }
        }
        true
    };
    let feasible = |r: f64| -> bool { solve_t(r).map(|t| arc_inside(t)).unwrap_or(false) };

    if !feasible(r_lo) {
        return Err(Error::numeric("no inscribed tangency circle fits the region", r_lo));
    }

    let r_best = if feasible(r_hi) {
        r_hi
    } else {
        let mut lo = r_lo;
        let mut hi = r_hi;
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    };

    let t = solve_t(r_best)?;
    let (v, r, w2) = touch_circle(c, mu, t)
        .ok_or_else(|| Error::numeric("tangency construction failed at the solution", t))?;
    let w1 = Complex64::new(-w2.re, w2.im);
    Ok(ElementaryDomainSpec {
        region,
        circle_center_v: v,
        circle_radius: r,
        touch_points: (w1, w2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn membership_examples() {
        let spec = LypRegionSpec::new(0.5, 1.0, 0.5).unwrap();
        // w = 0.1 e^{i pi/2}: 0.316 < 1.571 < 2.825.
        assert!(spec.contains(Complex64::from_polar(0.1, PI / 2.0)));
        // Positive real axis fails the strict lower bound.
        assert!(!spec.contains(Complex64::new(0.1, 0.0)));
        // |w| = eps fails the strict radius bound.
        assert!(!spec.contains(Complex64::from_polar(0.5, PI / 2.0)));
        // The vertex is excluded.
        assert!(!spec.contains(Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn admissibility_is_enforced() {
        assert!(LypRegionSpec::new(1.0, 2.0, 0.5).is_err());
        assert!(LypRegionSpec::new(0.5, 1.0, 1.0).is_err());
        assert!(LypRegionSpec::new(-0.5, 1.0, 0.5).is_err());
    }

    #[test]
    fn kv_round_trip() {
        let spec = LypRegionSpec::new(0.37, 1.25, 0.41).unwrap();
        let back = LypRegionSpec::from_kv(&spec.to_kv()).unwrap();
        assert_eq!(spec, back);
    }

    #[test]
    fn elementary_domain_symmetry_and_tangency() {
        let dom = build_elementary_domain(1.0, 0.5, 0.25).unwrap();
        let (w1, w2) = dom.touch_points();
        // Symmetric touch points: w2 = -conj(w1).
        assert_relative_eq!(w2.re, -w1.re, epsilon = 1e-12);
        assert_relative_eq!(w2.im, w1.im, epsilon = 1e-12);
        // Tangency residual |iv - w1| - r within 1e-9 r.
        let center = Complex64::new(0.0, dom.circle_center_v());
        let resid = ((center - w1).norm() - dom.circle_radius()).abs();
        assert!(resid < 1e-9 * dom.circle_radius());
        // Touch points lie on the branch set.
        let r = w2.norm();
        assert_relative_eq!(w2.arg(), r.powf(0.5), epsilon = 1e-9);
    }

    #[test]
    fn elementary_domain_boundary_inside_region_closure() {
        let dom = build_elementary_domain(1.0, 0.5, 0.25).unwrap();
        let boundary = dom.boundary_curve(3334); // ~1e4 samples
        assert!(boundary.len() >= 10_000);
        for &q in boundary.points() {
            assert!(
                dom.region().contains_closure(q, 1e-9),
                "boundary sample {q} escaped the region closure"
            );
        }
    }

    #[test]
    fn elementary_interior_nests_in_region() {
        let dom = build_elementary_domain(1.0, 0.5, 0.25).unwrap();
        for q in dom.interior_sample(2000, 7) {
            assert!(dom.region().contains(q), "interior sample {q} not in model region");
        }
    }

    #[test]
    fn elementary_membership_matches_winding() {
        let dom = build_elementary_domain(0.8, 0.4, 0.3).unwrap();
        let boundary = dom.boundary_curve(1024);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let r = dom.circle_radius();
        let top = dom.circle_center_v() + r;
        let mut checked = 0;
        for _ in 0..4000 {
            let q = Complex64::new(rng.random_range(-1.5 * r..1.5 * r), rng.random_range(-0.1 * top..1.2 * top));
            // Skip points too close to the boundary for the polyline test.
            if boundary.distance_to(q) < 1e-3 * r {
                continue;
            }
            let by_formula = dom.contains(q);
            let by_winding = boundary.winding_number(q) != 0;
            assert_eq!(by_formula, by_winding, "disagreement at {q}");
            checked += 1;
        }
        assert!(checked > 3000);
    }
}
