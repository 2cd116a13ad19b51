//! Harmonic extension of boundary data by the Poisson integral.

use super::boundary::BoundaryFunction;
use super::handle::{DomainTag, MapHandle, WirtingerFn};
use crate::error::Error;
use crate::Result;
use num_complex::Complex64;
use std::sync::Arc;

/// Harmonic extension `h(z) = (1/2pi) ∫ P(z, e^{it}) b(t) dt` by the
/// periodic trapezoid rule on `quadrature_n` nodes, with Wirtinger
/// derivatives from the differentiated kernel on the same nodes.
///
/// Evaluation is capped at radius `1 - 10/quadrature_n`: closer to the
/// circle the kernel peak is narrower than the node spacing can resolve.
pub fn poisson_extend(boundary: &BoundaryFunction, quadrature_n: usize) -> Result<MapHandle> {
    if quadrature_n < 64 {
        return Err(Error::parameter("Poisson quadrature needs at least 64 nodes"));
    }
    let n = quadrature_n;
    let values: Arc<Vec<Complex64>> = Arc::new(boundary.sample_uniform(n));
    for v in values.iter() {
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::data("boundary data is not finite"));
        }
    }
    let nodes: Arc<Vec<Complex64>> = Arc::new(
        (0..n)
            .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / n as f64))
            .collect(),
    );
    let radius_cap = 1.0 - 10.0 / n as f64;

    let check = move |z: Complex64| -> Result<()> {
        if z.norm() > radius_cap {
            return Err(Error::evaluation(format!(
                "radius {} exceeds the quadrature resolution cap {radius_cap}",
                z.norm()
            )));
        }
        Ok(())
    };

    let eval = {
        let values = values.clone();
        let nodes = nodes.clone();
        Arc::new(move |z: Complex64| {
            check(z)?;
            let mut acc = Complex64::new(0.0, 0.0);
            let one_minus = 1.0 - z.norm_sqr();
            for (zeta, b) in nodes.iter().zip(values.iter()) {
                acc += b * (one_minus / (zeta - z).norm_sqr());
            }
            Ok(acc / n as f64)
        })
    };

    let wirt: WirtingerFn = {
        let values = values.clone();
        let nodes = nodes.clone();
        Arc::new(move |z: Complex64| {
            check(z)?;
            let one_minus = 1.0 - z.norm_sqr();
            let mut dz = Complex64::new(0.0, 0.0);
            let mut dbz = Complex64::new(0.0, 0.0);
            for (zeta, b) in nodes.iter().zip(values.iter()) {
                let p = one_minus / (zeta - z).norm_sqr();
                let kz = p * (-z.conj() / one_minus + 1.0 / (zeta - z));
                let kbz = p * (-z / one_minus + 1.0 / (zeta.conj() - z.conj()));
                dz += b * kz;
                dbz += b * kbz;
            }
            Ok((dz / n as f64, dbz / n as f64))
        })
    };

    Ok(
        MapHandle::new(format!("poisson-extension(n={n})"), eval, Some(wirt), DomainTag::UnitDisk, None)
            .with_margin(Arc::new(move |z: Complex64| radius_cap - z.norm())),
    )
}
