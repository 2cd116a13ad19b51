//! Evaluable planar maps with Wirtinger derivative access.

use crate::error::Error;
use crate::Result;
use num_complex::Complex64;
use std::sync::Arc;

pub type EvalFn = Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>;
pub type WirtingerFn = Arc<dyn Fn(Complex64) -> Result<(Complex64, Complex64)> + Send + Sync>;
pub type MarginFn = Arc<dyn Fn(Complex64) -> f64 + Send + Sync>;

/// Natural domain of a map, used for interior-margin computation and
/// composition spot checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainTag {
    UnitDisk,
    UpperHalfPlane,
    Plane,
    /// Restricted or irregular domain; the handle carries its own margin
    /// function.
    Other,
}

/// An immutable, shareable planar map: evaluation, Wirtinger derivatives
/// (analytic where available, centered finite differences otherwise), a
/// domain tag, and an optional declared quasiconformality bound.
#[derive(Clone)]
pub struct MapHandle {
    name: String,
    eval: EvalFn,
    analytic_wirtinger: Option<WirtingerFn>,
    domain: DomainTag,
    declared_k: Option<f64>,
    margin_override: Option<MarginFn>,
}

impl std::fmt::Debug for MapHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MapHandle")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .field("declared_k", &self.declared_k)
            .field("analytic_wirtinger", &self.analytic_wirtinger.is_some())
            .finish()
    }
}

impl MapHandle {
    pub fn new(
        name: impl Into<String>,
        eval: EvalFn,
        analytic_wirtinger: Option<WirtingerFn>,
        domain: DomainTag,
        declared_k: Option<f64>,
    ) -> Self {
        MapHandle {
            name: name.into(),
            eval,
            analytic_wirtinger,
            domain,
            declared_k,
            margin_override: None,
        }
    }

    /// Attach a custom distance-to-boundary function (used by maps with
    /// restricted validity regions or interior derivative singularities).
    pub fn with_margin(mut self, margin: MarginFn) -> Self {
        self.margin_override = Some(margin);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> DomainTag {
        self.domain
    }

    pub fn declared_k(&self) -> Option<f64> {
        self.declared_k
    }

    pub fn has_analytic_wirtinger(&self) -> bool {
        self.analytic_wirtinger.is_some()
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        (self.eval)(z)
    }

    /// Distance from `z` to the boundary of the map's working domain
    /// (infinite-plane maps report unit scale).
    pub fn interior_margin(&self, z: Complex64) -> f64 {
        if let Some(m) = &self.margin_override {
            return m(z);
        }
        match self.domain {
            DomainTag::UnitDisk => 1.0 - z.norm(),
            DomainTag::UpperHalfPlane => z.im,
            DomainTag::Plane => 1.0,
            DomainTag::Other => 1.0,
        }
    }

    pub fn in_domain(&self, z: Complex64) -> bool {
        self.interior_margin(z) > 0.0
    }

    /// Finite-difference step at `z`: `max(1e-6, 1e-3 * margin)`, clamped so
    /// the four-point stencil stays interior.
    pub fn fd_step(&self, z: Complex64) -> f64 {
        let margin = self.interior_margin(z);
        (1e-6f64).max(1e-3 * margin).min(0.5 * margin)
    }

    /// Wirtinger derivatives `(dh, dbar_h)`: analytic when the map carries
    /// them, centered finite differences otherwise.
    pub fn wirtinger(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        if let Some(w) = &self.analytic_wirtinger {
            return w(z);
        }
        self.wirtinger_fd_at(z, self.fd_step(z))
    }

    /// Finite-difference Wirtinger derivatives with the default step,
    /// regardless of analytic availability (for cross-checks).
    pub fn wirtinger_fd(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        self.wirtinger_fd_at(z, self.fd_step(z))
    }

    /// Centered finite differences with an explicit step.
    pub fn wirtinger_fd_at(&self, z: Complex64, step: f64) -> Result<(Complex64, Complex64)> {
        if !(step > 0.0) {
            return Err(Error::evaluation(format!(
                "no interior margin for a finite-difference stencil at {z}"
            )));
        }
        let e = Complex64::new(step, 0.0);
        let ie = Complex64::new(0.0, step);
        let fx = (self.evaluate(z + e)? - self.evaluate(z - e)?) / (2.0 * step);
        let fy = (self.evaluate(z + ie)? - self.evaluate(z - ie)?) / (2.0 * step);
        let i = Complex64::new(0.0, 1.0);
        Ok(((fx - i * fy) / 2.0, (fx + i * fy) / 2.0))
    }
}

/// Pointwise dilatation data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilatationSample {
    pub z: Complex64,
    /// Minimal stretch `|dh| - |dbar_h|`.
    pub lambda: f64,
    /// Maximal stretch `|dh| + |dbar_h|`.
    pub big_lambda: f64,
    /// Dilatation quotient `Lambda / lambda` (infinite when `lambda <= 0`).
    pub d: f64,
}

/// Summary of a dilatation scan over a grid.
#[derive(Debug, Clone)]
pub struct DilatationScan {
    pub samples: Vec<DilatationSample>,
    pub min_lambda: f64,
    pub argmin_lambda: Complex64,
    pub max_big_lambda: f64,
    pub argmax_big_lambda: Complex64,
    pub max_d: f64,
    pub argmax_d: Complex64,
    /// Points where `lambda <= 0`: orientation or degeneracy warnings, never
    /// silently dropped.
    pub degenerate: Vec<Complex64>,
}

/// Dilatation quantities at one interior point.
pub fn dilatation_at(map: &MapHandle, z: Complex64) -> Result<DilatationSample> {
    if !(map.interior_margin(z) >= map.fd_step(z)) {
        return Err(Error::evaluation(format!(
            "point {z} lacks interior margin for dilatation sampling"
        )));
    }
    let (dz, dbz) = map.wirtinger(z)?;
    let lambda = dz.norm() - dbz.norm();
    let big_lambda = dz.norm() + dbz.norm();
    let d = if lambda > 0.0 { big_lambda / lambda } else { f64::INFINITY };
    Ok(DilatationSample {
        z,
        lambda,
        big_lambda,
        d,
    })
}

/// Scan a grid of interior points, reporting extremes with their locations.
pub fn dilatation_scan(map: &MapHandle, grid: &[Complex64]) -> Result<DilatationScan> {
    if grid.is_empty() {
        return Err(Error::data("dilatation scan needs a nonempty grid"));
    }
    let mut samples = Vec::with_capacity(grid.len());
    let mut degenerate = Vec::new();
    for &z in grid {
        let s = dilatation_at(map, z)?;
        if s.lambda <= 0.0 {
            degenerate.push(z);
        }
        samples.push(s);
    }
    let mut min_lambda = f64::INFINITY;
    let mut argmin_lambda = grid[0];
    let mut max_big_lambda = f64::NEG_INFINITY;
    let mut argmax_big_lambda = grid[0];
    let mut max_d = f64::NEG_INFINITY;
    let mut argmax_d = grid[0];
    for s in &samples {
        if s.lambda < min_lambda {
            min_lambda = s.lambda;
            argmin_lambda = s.z;
        }
        if s.big_lambda > max_big_lambda {
            max_big_lambda = s.big_lambda;
            argmax_big_lambda = s.z;
        }
        if s.d > max_d {
            max_d = s.d;
            argmax_d = s.z;
        }
    }
    Ok(DilatationScan {
        samples,
        min_lambda,
        argmin_lambda,
        max_big_lambda,
        argmax_big_lambda,
        max_d,
        argmax_d,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identityish() -> MapHandle {
        MapHandle::new(
            "identity",
            Arc::new(|z| Ok(z)),
            Some(Arc::new(|_| Ok((Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))))),
            DomainTag::Plane,
            Some(1.0),
        )
    }

    #[test]
    fn identity_dilatation_is_exact() {
        let id = identityish();
        let s = dilatation_at(&id, Complex64::new(0.3, -0.4)).unwrap();
        assert_eq!(s.lambda, 1.0);
        assert_eq!(s.big_lambda, 1.0);
        assert_eq!(s.d, 1.0);
    }

    #[test]
    fn fd_matches_analytic_for_smooth_map() {
        // f(z) = z^2 + conj(z): dh = 2z, dbar_h = 1.
        let f = MapHandle::new(
            "z^2 + conj",
            Arc::new(|z: Complex64| Ok(z * z + z.conj())),
            None,
            DomainTag::Plane,
            None,
        );
        let z = Complex64::new(0.3, 0.7);
        let (dz, dbz) = f.wirtinger(z).unwrap();
        assert!((dz - 2.0 * z).norm() < 1e-8);
        assert!((dbz - Complex64::new(1.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn fd_error_shrinks_quadratically() {
        // Second-order convergence on a genuinely non-analytic map (the
        // four-point stencil is truncation-free on holomorphic ones):
        // f(z) = z^2 conj(z), with dh = 2 z conj(z) and dbar_h = z^2.
        let f = MapHandle::new(
            "z^2 conj(z)",
            Arc::new(|z: Complex64| Ok(z * z * z.conj())),
            None,
            DomainTag::Plane,
            None,
        );
        let z = Complex64::new(0.4, 0.2);
        let exact = 2.0 * z * z.conj();
        let e1 = (f.wirtinger_fd_at(z, 1e-3).unwrap().0 - exact).norm();
        let e2 = (f.wirtinger_fd_at(z, 5e-4).unwrap().0 - exact).norm();
        let ratio = e1 / e2;
        assert!(
            (2.5..6.0).contains(&ratio),
            "expected ~4x error reduction, got {ratio}"
        );
    }

    #[test]
    fn degenerate_points_are_flagged() {
        // conj(z) is orientation reversing: lambda < 0 everywhere.
        let f = MapHandle::new(
            "conj",
            Arc::new(|z: Complex64| Ok(z.conj())),
            None,
            DomainTag::Plane,
            None,
        );
        let scan = dilatation_scan(&f, &[Complex64::new(0.5, 0.5)]).unwrap();
        assert_eq!(scan.degenerate.len(), 1);
    }

    #[test]
    fn margin_blocks_boundary_sampling() {
        let f = MapHandle::new(
            "disk id",
            Arc::new(|z| Ok(z)),
            None,
            DomainTag::UnitDisk,
            Some(1.0),
        );
        assert!(dilatation_at(&f, Complex64::new(1.0, 0.0)).is_err());
    }
}
