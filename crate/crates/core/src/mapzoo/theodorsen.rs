//! Numeric Riemann map of the disk onto a starlike domain via the boundary
//! correspondence integral equation.

use super::boundary::{BoundaryFunction, Interp};
use super::handle::MapHandle;
use super::poisson::poisson_extend;
use crate::error::Error;
use crate::Result;
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::PI;

/// Convergence data of the boundary-correspondence iteration.
#[derive(Debug, Clone)]
pub struct TheodorsenReport {
    pub iterations_used: usize,
    pub residuals: Vec<f64>,
    pub final_residual: f64,
    /// Relative spectral energy of the converged boundary values in
    /// non-analytic (nonpositive-frequency) modes.
    pub analyticity_residual: f64,
}

/// Radial function of a starlike curve, interpolated from angle/radius
/// samples.
struct RadialFn {
    phis: Vec<f64>,
    radii: Vec<f64>,
}

impl RadialFn {
    fn from_boundary(boundary: &BoundaryFunction, m: usize) -> Result<Self> {
        let vals = boundary.sample_uniform(m);
        let mut phis = Vec::with_capacity(m + 1);
        let mut radii = Vec::with_capacity(m + 1);
        let mut prev = vals[0].arg();
        let mut offset = 0.0;
        for (j, v) in vals.iter().enumerate() {
            let r = v.norm();
            if r == 0.0 {
                return Err(Error::data("starlike boundary passes through 0"));
            }
            let mut a = v.arg() + offset;
            while a < prev - PI {
                a += 2.0 * PI;
                offset += 2.0 * PI;
            }
            if j > 0 && a <= prev {
                return Err(Error::data("boundary is not starlike about 0 (angle not increasing)"));
            }
            phis.push(a);
            radii.push(r);
            prev = a;
        }
        if (phis[m - 1] - phis[0]) >= 2.0 * PI {
            return Err(Error::data("boundary winds more than once"));
        }
        phis.push(phis[0] + 2.0 * PI);
        radii.push(radii[0]);
        Ok(RadialFn { phis, radii })
    }

    fn eval(&self, phi: f64) -> f64 {
        let lo = self.phis[0];
        let span = 2.0 * PI;
        let p = lo + (phi - lo).rem_euclid(span);
        let idx = match self.phis.binary_search_by(|x| x.partial_cmp(&p).unwrap()) {
            Ok(i) => i,
            Err(i) => i.saturating_sub(1),
        };
        let i = idx.min(self.phis.len() - 2);
        let (p0, p1) = (self.phis[i], self.phis[i + 1]);
        let frac = if p1 > p0 { (p - p0) / (p1 - p0) } else { 0.0 };
        self.radii[i] * (1.0 - frac) + self.radii[i + 1] * frac
    }
}

/// Zero-mean harmonic conjugate of uniformly sampled periodic data.
fn conjugate_samples(u: &[f64]) -> Vec<f64> {
    let n = u.len();
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let ifft = planner.plan_fft_inverse(n);
    let mut buf: Vec<rustfft::num_complex::Complex<f64>> =
        u.iter().map(|&x| rustfft::num_complex::Complex::new(x, 0.0)).collect();
    fft.process(&mut buf);
    let half = n / 2;
    for (k, c) in buf.iter_mut().enumerate() {
        if k == 0 || (n % 2 == 0 && k == half) {
            *c = rustfft::num_complex::Complex::new(0.0, 0.0);
        } else if k < half || (n % 2 == 1 && k == half) {
            // positive frequency: multiply by -i
            *c = rustfft::num_complex::Complex::new(c.im, -c.re);
        } else {
            // negative frequency: multiply by +i
            *c = rustfft::num_complex::Complex::new(-c.im, c.re);
        }
    }
    ifft.process(&mut buf);
    buf.into_iter().map(|c| c.re / n as f64).collect()
}

/// Conformal map of the unit disk onto the interior of a starlike boundary,
/// fixing 0 with positive derivative there.
///
/// Runs the classical boundary-correspondence iteration on `grid_n` uniform
/// nodes (damped by 0.5 whenever the residual grows), then returns the
/// Poisson-integral handle of the converged boundary values.
pub fn theodorsen_conformal(
    boundary: &BoundaryFunction,
    grid_n: usize,
    max_iterations: usize,
    tol: f64,
) -> Result<(MapHandle, TheodorsenReport)> {
    if grid_n < 64 {
        return Err(Error::parameter("correspondence grid needs at least 64 nodes"));
    }
    if !(tol > 0.0) {
        return Err(Error::parameter("tolerance must be positive"));
    }
    let radial = RadialFn::from_boundary(boundary, 4 * grid_n)?;
    let n = grid_n;
    let thetas: Vec<f64> = (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
    let mut phi: Vec<f64> = thetas.clone();
    let mut residuals = Vec::new();
    let mut prev_res = f64::INFINITY;
    let mut converged = false;
    for _ in 0..max_iterations {
        let u: Vec<f64> = phi.iter().map(|&p| radial.eval(p).ln()).collect();
        let v = conjugate_samples(&u);
        let mut res = 0.0f64;
        let candidate: Vec<f64> = thetas.iter().zip(&v).map(|(&t, &vk)| t + vk).collect();
        for (c, p) in candidate.iter().zip(&phi) {
            res = res.max((c - p).abs());
        }
        let damp = if res > prev_res { 0.5 } else { 1.0 };
        for (p, c) in phi.iter_mut().zip(&candidate) {
            *p += damp * (*c - *p);
        }
        residuals.push(res);
        prev_res = res;
        if res < tol {
            converged = true;
            break;
        }
    }
    let final_residual = residuals.last().copied().unwrap_or(f64::INFINITY);
    if !converged {
        let tail: Vec<String> = residuals.iter().rev().take(8).map(|r| format!("{r:.3e}")).collect();
        return Err(Error::numeric(
            format!("boundary correspondence did not converge; residual history (latest first): {}", tail.join(", ")),
            final_residual,
        ));
    }

    let values: Vec<Complex64> = phi.iter().map(|&p| Complex64::from_polar(radial.eval(p), p)).collect();
    let analyticity_residual = nonanalytic_energy(&values);
    let samples = BoundaryFunction::from_samples(values, Interp::Trigonometric)?;
    let handle = poisson_extend(&samples, n)?;
    let report = TheodorsenReport {
        iterations_used: residuals.len(),
        residuals,
        final_residual,
        analyticity_residual,
    };
    Ok((handle, report))
}

/// Relative spectral energy outside the strictly positive frequencies.
fn nonanalytic_energy(values: &[Complex64]) -> f64 {
    let n = values.len();
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let mut buf: Vec<rustfft::num_complex::Complex<f64>> =
        values.iter().map(|v| rustfft::num_complex::Complex::new(v.re, v.im)).collect();
    fft.process(&mut buf);
    let half = n / 2;
    let total: f64 = buf.iter().map(|c| c.norm_sqr()).sum();
    if total == 0.0 {
        return 0.0;
    }
    let bad: f64 = buf
        .iter()
        .enumerate()
        .filter(|(k, _)| *k == 0 || *k > half)
        .map(|(_, c)| c.norm_sqr())
        .sum();
    (bad / total).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn conjugate_of_cos_is_sin() {
        let n = 256;
        let u: Vec<f64> = (0..n).map(|j| (3.0 * 2.0 * PI * j as f64 / n as f64).cos()).collect();
        let v = conjugate_samples(&u);
        for (j, &vj) in v.iter().enumerate() {
            let t = 2.0 * PI * j as f64 / n as f64;
            assert!((vj - (3.0 * t).sin()).abs() < 1e-10);
        }
    }

    #[test]
    fn disk_of_radius_r_maps_to_scaling() {
        let b = BoundaryFunction::from_fn(|t| Complex64::from_polar(2.5, t));
        let (f, report) = theodorsen_conformal(&b, 128, 50, 1e-12).unwrap();
        assert!(report.final_residual < 1e-12);
        for z in [Complex64::new(0.3, 0.1), Complex64::new(-0.5, 0.4)] {
            let w = f.evaluate(z).unwrap();
            assert!((w - 2.5 * z).norm() < 1e-9, "expected scaling, got {w} at {z}");
        }
    }

    #[test]
    fn ellipse_map_boundary_stays_on_ellipse() {
        let (a, b) = (1.0, 1.2);
        let boundary = BoundaryFunction::from_fn(move |t| Complex64::new(a * t.cos(), b * t.sin()));
        let tol = 1e-10;
        let (f, report) = theodorsen_conformal(&boundary, 256, 200, tol).unwrap();
        assert!(report.analyticity_residual < 1e-6, "analyticity residual {}", report.analyticity_residual);
        // Push near-boundary circles through the map and test the implicit
        // ellipse equation within interpolation error.
        let r = 0.95;
        for j in 0..64 {
            let t = 2.0 * PI * j as f64 / 64.0;
            let w = f.evaluate(Complex64::from_polar(r, t)).unwrap();
            let implicit = (w.re / a).powi(2) + (w.im / b).powi(2);
            assert!(implicit < 1.0, "image left the ellipse at {w}");
        }
        // The grid boundary values themselves satisfy the ellipse equation.
        let radial = RadialFn::from_boundary(&boundary, 1024).unwrap();
        for j in 0..256 {
            let p = 2.0 * PI * j as f64 / 256.0;
            let w = Complex64::from_polar(radial.eval(p), p);
            let implicit = (w.re / a).powi(2) + (w.im / b).powi(2);
            assert!((implicit - 1.0).abs() < 1e-4, "radial extraction off: {implicit}");
        }
    }

    #[test]
    fn ellipse_difference_quotients_form_positive_band() {
        let boundary = BoundaryFunction::from_fn(|t| Complex64::new(t.cos(), 1.2 * t.sin()));
        let (f, _) = theodorsen_conformal(&boundary, 256, 200, 1e-10).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let r = 0.96;
        let mut lo = f64::INFINITY;
        let mut hi: f64 = 0.0;
        for _ in 0..2000 {
            let t1 = rng.random_range(0.0..2.0 * PI);
            let t2 = t1 + rng.random_range(0.01..0.4);
            let z1 = Complex64::from_polar(r, t1);
            let z2 = Complex64::from_polar(r, t2);
            let q = (f.evaluate(z1).unwrap() - f.evaluate(z2).unwrap()).norm() / (z1 - z2).norm();
            lo = lo.min(q);
            hi = hi.max(q);
        }
        assert!(lo > 0.3, "lower difference-quotient bound {lo}");
        assert!(hi < 3.0, "upper difference-quotient bound {hi}");
    }

    #[test]
    fn non_starlike_boundary_is_rejected() {
        // A limaçon-style curve that loops through angles non-monotonically.
        let bad = BoundaryFunction::from_fn(|t| {
            Complex64::new(t.cos() + 0.9 * (2.0 * t).cos(), t.sin() + 0.9 * (2.0 * t).sin())
        });
        assert!(theodorsen_conformal(&bad, 128, 50, 1e-10).is_err());
    }
}
