//! Closed-form model maps and composition.

use super::handle::{DomainTag, MapHandle, WirtingerFn};
use crate::error::Error;
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::Arc;

/// The identity map on the plane.
pub fn make_identity() -> MapHandle {
    MapHandle::new(
        "identity",
        Arc::new(Ok),
        Some(Arc::new(|_| Ok((Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))))),
        DomainTag::Plane,
        Some(1.0),
    )
}

/// Radial stretch `f(z) = z |z|^(1/K - 1)`: fixes 0 and infinity, has
/// constant dilatation `K` away from the origin.
pub fn make_radial_stretch(k: f64) -> Result<MapHandle> {
    if !(k >= 1.0) || !k.is_finite() {
        return Err(Error::parameter("radial stretch needs K >= 1"));
    }
    if k == 1.0 {
        return Ok(make_identity());
    }
    let a = 1.0 / k - 1.0;
    let eval = Arc::new(move |z: Complex64| {
        if z.norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        Ok(z * z.norm().powf(a))
    });
    let wirt: WirtingerFn = Arc::new(move |z: Complex64| {
        let r = z.norm();
        if r == 0.0 {
            return Err(Error::evaluation("radial stretch derivative is singular at 0"));
        }
        let ra = r.powf(a);
        let dz = Complex64::new((1.0 + a / 2.0) * ra, 0.0);
        let dbz = (a / 2.0) * ra * z * z / (r * r);
        Ok((dz, dbz))
    });
    Ok(MapHandle::new(format!("radial-stretch(K={k})"), eval, Some(wirt), DomainTag::Plane, Some(k))
        .with_margin(Arc::new(|z: Complex64| z.norm())))
}

/// Angular stretch `f(r e^{i theta}) = r e^{i psi(theta)}` for a strictly
/// increasing degree-one circle map `psi`. The quasiconformality bound is
/// estimated as `max(sup psi', sup 1/psi')` on a 4096-point grid.
pub fn make_angular_stretch(psi: Arc<dyn Fn(f64) -> f64 + Send + Sync>) -> Result<MapHandle> {
    const GRID: usize = 4096;
    // Degree-one periodicity.
    if (psi(2.0 * PI) - psi(0.0) - 2.0 * PI).abs() > 1e-9 {
        return Err(Error::data("angular stretch needs psi(t + 2pi) = psi(t) + 2pi"));
    }
    let dpsi = {
        let psi = psi.clone();
        move |t: f64| {
            let h = 1e-6;
            (psi(t + h) - psi(t - h)) / (2.0 * h)
        }
    };
    let mut sup_d = f64::NEG_INFINITY;
    let mut inf_d = f64::INFINITY;
    for i in 0..GRID {
        let t = 2.0 * PI * i as f64 / GRID as f64;
        let d = dpsi(t);
        if d <= 0.0 {
            return Err(Error::data(format!("psi is not strictly increasing (psi'({t:.4}) = {d:.4e})")));
        }
        sup_d = sup_d.max(d);
        inf_d = inf_d.min(d);
    }
    let k = sup_d.max(1.0 / inf_d);
    let eval = {
        let psi = psi.clone();
        Arc::new(move |z: Complex64| {
            if z.norm() == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            Ok(Complex64::from_polar(z.norm(), psi(z.arg())))
        })
    };
    let wirt: WirtingerFn = {
        let psi = psi.clone();
        Arc::new(move |z: Complex64| {
            if z.norm() == 0.0 {
                return Err(Error::evaluation("angular stretch derivative is singular at 0"));
            }
            let t = z.arg();
            let h = 1e-6;
            let d = (psi(t + h) - psi(t - h)) / (2.0 * h);
            let p = psi(t);
            let dz = Complex64::from_polar((1.0 + d) / 2.0, p - t);
            let dbz = Complex64::from_polar(1.0, p + t) * ((1.0 - d) / 2.0);
            Ok((dz, dbz))
        })
    };
    Ok(
        MapHandle::new(format!("angular-stretch(K={k:.6})"), eval, Some(wirt), DomainTag::Plane, Some(k))
            .with_margin(Arc::new(|z: Complex64| z.norm())),
    )
}

/// The logarithmic quotient `A(z) = z / ln(1/z)` on its validity region
/// `{ |z| < 0.2, Im z > 0 }`, with `A'(z) = -1/ln z + 1/(ln z)^2`.
pub fn make_log_quotient() -> MapHandle {
    const RADIUS: f64 = 0.2;
    let margin = Arc::new(move |z: Complex64| z.im.min(RADIUS - z.norm()));
    let check = move |z: Complex64| -> Result<()> {
        if z.norm() == 0.0 || z.im <= 0.0 || z.norm() >= RADIUS {
            return Err(Error::evaluation(format!(
                "log-quotient evaluated outside its validity region at {z}"
            )));
        }
        Ok(())
    };
    let eval = Arc::new(move |z: Complex64| {
        check(z)?;
        Ok(-z / z.ln())
    });
    let wirt: WirtingerFn = Arc::new(move |z: Complex64| {
        check(z)?;
        let l = z.ln();
        Ok((-1.0 / l + 1.0 / (l * l), Complex64::new(0.0, 0.0)))
    });
    MapHandle::new("log-quotient", eval, Some(wirt), DomainTag::Other, Some(1.0)).with_margin(margin)
}

fn mobius_handle(name: String, num: (Complex64, Complex64), den: (Complex64, Complex64), domain: DomainTag) -> MapHandle {
    // (a z + b) / (c z + d)
    let (a, b) = num;
    let (c, d) = den;
    let det = a * d - b * c;
    let eval = Arc::new(move |z: Complex64| {
        let dn = c * z + d;
        if dn.norm() == 0.0 {
            return Err(Error::evaluation("Möbius map evaluated at its pole"));
        }
        Ok((a * z + b) / dn)
    });
    let wirt: WirtingerFn = Arc::new(move |z: Complex64| {
        let dn = c * z + d;
        if dn.norm() == 0.0 {
            return Err(Error::evaluation("Möbius derivative at its pole"));
        }
        Ok((det / (dn * dn), Complex64::new(0.0, 0.0)))
    });
    MapHandle::new(name, eval, Some(wirt), domain, Some(1.0))
}

/// Disk automorphism `z -> (z - a) / (1 - conj(a) z)` for `|a| < 1`.
pub fn make_disk_automorphism(a: Complex64) -> Result<MapHandle> {
    if !(a.norm() < 1.0) {
        return Err(Error::parameter("disk automorphism needs |a| < 1"));
    }
    Ok(mobius_handle(
        format!("disk-automorphism(a={a})"),
        (Complex64::new(1.0, 0.0), -a),
        (-a.conj(), Complex64::new(1.0, 0.0)),
        DomainTag::UnitDisk,
    ))
}

/// Conformal half-plane-to-disk map `(4i - z)/(4i + z)` sending 0 to 1.
pub fn make_half_plane_to_disk() -> MapHandle {
    let four_i = Complex64::new(0.0, 4.0);
    mobius_handle(
        "half-plane-to-disk".into(),
        (-Complex64::new(1.0, 0.0), four_i),
        (Complex64::new(1.0, 0.0), four_i),
        DomainTag::UpperHalfPlane,
    )
}

/// Handle form of the forward normalizer `p z / (z + p)`.
pub fn make_mobius_x_handle(p: Complex64) -> Result<MapHandle> {
    if p.norm() == 0.0 {
        return Err(Error::parameter("puncture p must be nonzero"));
    }
    Ok(mobius_handle(
        format!("mobius-x(p={p})"),
        (p, Complex64::new(0.0, 0.0)),
        (Complex64::new(1.0, 0.0), p),
        DomainTag::Plane,
    ))
}

/// Handle form of the inverse normalizer `-p z / (z - p)`.
pub fn make_mobius_y_handle(p: Complex64) -> Result<MapHandle> {
    if p.norm() == 0.0 {
        return Err(Error::parameter("puncture p must be nonzero"));
    }
    Ok(mobius_handle(
        format!("mobius-y(p={p})"),
        (-p, Complex64::new(0.0, 0.0)),
        (Complex64::new(1.0, 0.0), -p),
        DomainTag::Plane,
    ))
}

/// Compose maps applied in list order: `compose([f, g])(z) = g(f(z))`.
///
/// Wirtinger derivatives compose by the chain rule; declared bounds multiply
/// when every part declares one. Each validation point is threaded through
/// the chain and must land strictly inside the domain of every successor.
pub fn compose(maps: &[MapHandle], validation_points: &[Complex64]) -> Result<MapHandle> {
    if maps.is_empty() {
        return Err(Error::parameter("compose needs at least one map"));
    }
    for &v in validation_points {
        let mut u = v;
        for (i, m) in maps.iter().enumerate() {
            if !m.in_domain(u) {
                return Err(Error::Composition(format!(
                    "validation point {v} reaches {u}, outside the domain of part {i} ({})",
                    m.name()
                )));
            }
            u = m.evaluate(u).map_err(|e| {
                Error::Composition(format!("validation point {v} failed in part {i} ({}): {e}", m.name()))
            })?;
        }
    }
    let name = format!(
        "compose({})",
        maps.iter().map(|m| m.name().to_string()).collect::<Vec<_>>().join(", ")
    );
    let declared_k = maps
        .iter()
        .map(|m| m.declared_k())
        .try_fold(1.0, |acc, k| k.map(|k| acc * k));
    let chain: Vec<MapHandle> = maps.to_vec();
    let eval = {
        let chain = chain.clone();
        Arc::new(move |z: Complex64| chain.iter().try_fold(z, |u, m| m.evaluate(u)))
    };
    let wirt: WirtingerFn = {
        let chain = chain.clone();
        Arc::new(move |z: Complex64| {
            let mut u = z;
            let mut dz = Complex64::new(1.0, 0.0);
            let mut dbz = Complex64::new(0.0, 0.0);
            for m in &chain {
                let (gw, gwb) = m.wirtinger(u)?;
                let next_dz = gw * dz + gwb * dbz.conj();
                let next_dbz = gw * dbz + gwb * dz.conj();
                dz = next_dz;
                dbz = next_dbz;
                u = m.evaluate(u)?;
            }
            Ok((dz, dbz))
        })
    };
    let first = maps[0].clone();
    let domain = first.domain();
    Ok(MapHandle::new(name, eval, Some(wirt), domain, declared_k)
        .with_margin(Arc::new(move |z| first.interior_margin(z))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapzoo::handle::{dilatation_at, dilatation_scan};
    use approx::assert_relative_eq;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn annulus_grid(n: usize, r_lo: f64, r_hi: f64, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| Complex64::from_polar(rng.random_range(r_lo..r_hi), rng.random_range(0.0..2.0 * PI)))
            .collect()
    }

    #[test]
    fn radial_stretch_modulus_law() {
        let f = make_radial_stretch(2.0).unwrap();
        for z in annulus_grid(100, 0.1, 3.0, 1) {
            let w = f.evaluate(z).unwrap();
            assert_relative_eq!(w.norm(), z.norm().powf(0.5), max_relative = 1e-12);
        }
        assert_eq!(make_radial_stretch(1.0).unwrap().declared_k(), Some(1.0));
    }

    #[test]
    fn radial_stretch_dilatation_analytic_and_fd() {
        let f = make_radial_stretch(2.0).unwrap();
        let grid = annulus_grid(1000, 0.1, 1.0, 2);
        let scan = dilatation_scan(&f, &grid).unwrap();
        assert!((scan.max_d - 2.0).abs() < 1e-6, "analytic max D = {}", scan.max_d);
        assert!(scan.degenerate.is_empty());
        // Finite differences agree to 1e-3.
        for &z in grid.iter().take(200) {
            let (dz, dbz) = f.wirtinger_fd(z).unwrap();
            let d = (dz.norm() + dbz.norm()) / (dz.norm() - dbz.norm());
            assert!((d - 2.0).abs() < 1e-3, "fd dilatation {d} at {z}");
        }
    }

    #[test]
    fn angular_stretch_properties() {
        let psi = Arc::new(|t: f64| t + 0.5 * t.sin());
        let f = make_angular_stretch(psi).unwrap();
        // Radii preserved.
        for z in annulus_grid(50, 0.2, 2.0, 3) {
            assert_relative_eq!(f.evaluate(z).unwrap().norm(), z.norm(), max_relative = 1e-12);
        }
        // K = max over theta of max(psi', 1/psi') with psi' = 1 + 0.5 cos:
        // the extremes are 1.5 and 0.5, so K = 2.
        assert_relative_eq!(f.declared_k().unwrap(), 2.0, epsilon = 1e-6);
        // Identity psi gives the identity map.
        let id = make_angular_stretch(Arc::new(|t| t)).unwrap();
        let z = Complex64::new(0.3, 0.4);
        assert!((id.evaluate(z).unwrap() - z).norm() < 1e-12);
        // Non-monotone psi is rejected.
        assert!(make_angular_stretch(Arc::new(|t: f64| t + 1.5 * t.sin())).is_err());
    }

    #[test]
    fn angular_stretch_dilatation_matches_k() {
        let f = make_angular_stretch(Arc::new(|t: f64| t + 0.5 * t.sin())).unwrap();
        let scan = dilatation_scan(&f, &annulus_grid(500, 0.2, 1.0, 4)).unwrap();
        assert!(scan.max_d <= f.declared_k().unwrap() * (1.0 + 5e-3));
    }

    #[test]
    fn log_quotient_derivative_decays() {
        let f = make_log_quotient();
        // |A'(i 10^-k)| strictly decreasing for k = 2..8.
        let mut prev = f64::INFINITY;
        for k in 2..=8 {
            let z = Complex64::new(0.0, 10f64.powi(-k));
            let (dz, _) = f.wirtinger(z).unwrap();
            assert!(dz.norm() < prev, "|A'| not decreasing at k={k}");
            prev = dz.norm();
        }
        // min lambda over the segment z = iy, y in [1e-6, 1e-2] is < 0.2.
        let mut min_lambda = f64::INFINITY;
        for i in 0..=400 {
            let y = 10f64.powf(-6.0 + 4.0 * i as f64 / 400.0);
            let s = dilatation_at(&f, Complex64::new(0.0, y)).unwrap();
            min_lambda = min_lambda.min(s.lambda);
        }
        assert!(min_lambda < 0.2, "min lambda {min_lambda}");
    }

    #[test]
    fn log_quotient_vanishes_at_origin_limit() {
        let f = make_log_quotient();
        let mut prev = f64::INFINITY;
        for k in 2..=7 {
            let z = Complex64::new(0.0, 10f64.powi(-k));
            let w = f.evaluate(z).unwrap().norm();
            assert!(w < prev);
            prev = w;
        }
        assert!(prev < 1e-7);
        assert!(f.evaluate(Complex64::new(0.0, 0.3)).is_err());
        assert!(f.evaluate(Complex64::new(0.1, -0.05)).is_err());
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let a = Complex64::new(0.3, -0.1);
        let f = make_disk_automorphism(a).unwrap();
        let g = make_disk_automorphism(-a).unwrap();
        // (z-a)/(1-conj(a)z) inverted is (w+a)/(1+conj(a)w).
        let pts: Vec<Complex64> = annulus_grid(50, 0.0 + 0.05, 0.7, 5);
        let id = compose(&[f, g], &pts).unwrap();
        for &z in &pts {
            assert!((id.evaluate(z).unwrap() - z).norm() < 1e-12);
        }
    }

    #[test]
    fn compose_half_plane_chain_hits_image_of_zero() {
        // Mapping the half-plane to the disk first: the chain at 0 equals the
        // second map at 1.
        let a0 = make_half_plane_to_disk();
        let h = make_disk_automorphism(Complex64::new(0.3, 0.0)).unwrap();
        let chain = compose(&[a0, h.clone()], &[Complex64::new(0.0, 1.0)]).unwrap();
        let lhs = chain.evaluate(Complex64::new(0.0, 0.0)).unwrap();
        let rhs = h.evaluate(Complex64::new(1.0, 0.0)).unwrap();
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn compose_radial_stretches_multiplies_dilatation() {
        let f = make_radial_stretch(1.5).unwrap();
        let g = make_radial_stretch(2.0).unwrap();
        let fg = compose(&[f, g], &[Complex64::new(0.5, 0.5)]).unwrap();
        assert_relative_eq!(fg.declared_k().unwrap(), 3.0);
        let direct = make_radial_stretch(3.0).unwrap();
        for z in annulus_grid(100, 0.1, 2.0, 6) {
            let w1 = fg.evaluate(z).unwrap();
            let w2 = direct.evaluate(z).unwrap();
            assert!((w1 - w2).norm() < 1e-12 * w2.norm().max(1.0));
            let s = dilatation_at(&fg, z).unwrap();
            assert_relative_eq!(s.d, 3.0, max_relative = 1e-9);
        }
    }

    #[test]
    fn compose_associativity_at_validation_points() {
        let f = make_radial_stretch(1.3).unwrap();
        let g = make_angular_stretch(Arc::new(|t: f64| t + 0.3 * t.sin())).unwrap();
        let h = make_disk_automorphism(Complex64::new(0.2, 0.1)).unwrap();
        let pts = annulus_grid(30, 0.2, 0.8, 7);
        let left = compose(&[compose(&[f.clone(), g.clone()], &pts).unwrap(), h.clone()], &pts).unwrap();
        let right = compose(&[f, compose(&[g, h], &pts).unwrap()], &pts).unwrap();
        for &z in &pts {
            let a = left.evaluate(z).unwrap();
            let b = right.evaluate(z).unwrap();
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn compose_rejects_domain_escape() {
        // The scaled map pushes points outside the unit disk, where the disk
        // automorphism's domain check must fire.
        let blow_up = MapHandle::new(
            "times-10",
            Arc::new(|z: Complex64| Ok(z * 10.0)),
            None,
            DomainTag::Plane,
            Some(1.0),
        );
        let aut = make_disk_automorphism(Complex64::new(0.1, 0.0)).unwrap();
        let err = compose(&[blow_up, aut], &[Complex64::new(0.5, 0.0)]);
        assert!(err.is_err());
    }
}
