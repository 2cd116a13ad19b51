//! Periodic boundary data for harmonic extension.

use crate::error::Error;
use crate::Result;
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::f64::consts::PI;
use std::io::{BufRead, Write};
use std::sync::Arc;

/// Interpolation mode for sampled boundary data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interp {
    Linear,
    Trigonometric,
}

enum Repr {
    Closure(Arc<dyn Fn(f64) -> Complex64 + Send + Sync>),
    Samples {
        values: Vec<Complex64>,
        interp: Interp,
        /// Fourier coefficients, precomputed for trigonometric interpolation.
        spectrum: Option<Vec<Complex64>>,
    },
}

/// A periodic map from the angle `t` in `[0, 2pi)` to the plane, backed
/// either by a closure or by dense uniform samples with an interpolation
/// flag.
pub struct BoundaryFunction {
    rep: Repr,
}

impl Clone for BoundaryFunction {
    fn clone(&self) -> Self {
        match &self.rep {
            Repr::Closure(f) => BoundaryFunction {
                rep: Repr::Closure(f.clone()),
            },
            Repr::Samples {
                values,
                interp,
                spectrum,
            } => BoundaryFunction {
                rep: Repr::Samples {
                    values: values.clone(),
                    interp: *interp,
                    spectrum: spectrum.clone(),
                },
            },
        }
    }
}

impl std::fmt::Debug for BoundaryFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.rep {
            Repr::Closure(_) => write!(f, "BoundaryFunction(closure)"),
            Repr::Samples { values, interp, .. } => {
                write!(f, "BoundaryFunction({} samples, {:?})", values.len(), interp)
            }
        }
    }
}

impl BoundaryFunction {
    pub fn from_fn(f: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        BoundaryFunction {
            rep: Repr::Closure(Arc::new(f)),
        }
    }

    /// Uniform samples at `t_j = 2 pi j / n`.
    pub fn from_samples(values: Vec<Complex64>, interp: Interp) -> Result<Self> {
        if values.len() < 8 {
            return Err(Error::data("boundary needs at least 8 samples"));
        }
        let spectrum = match interp {
            Interp::Trigonometric => Some(dft(&values)),
            Interp::Linear => None,
        };
        Ok(BoundaryFunction {
            rep: Repr::Samples {
                values,
                interp,
                spectrum,
            },
        })
    }

    /// Evaluate at any angle (wrapped periodically).
    pub fn eval(&self, t: f64) -> Complex64 {
        match &self.rep {
            Repr::Closure(f) => f(t),
            Repr::Samples {
                values,
                interp,
                spectrum,
            } => {
                let n = values.len();
                let tau = t.rem_euclid(2.0 * PI);
                match interp {
                    Interp::Linear => {
                        let x = tau * n as f64 / (2.0 * PI);
                        let i = (x.floor() as usize) % n;
                        let frac = x - x.floor();
                        values[i] * (1.0 - frac) + values[(i + 1) % n] * frac
                    }
                    Interp::Trigonometric => eval_series(spectrum.as_ref().unwrap(), tau),
                }
            }
        }
    }

    /// Resample onto `n` uniform nodes.
    pub fn sample_uniform(&self, n: usize) -> Vec<Complex64> {
        (0..n).map(|j| self.eval(2.0 * PI * j as f64 / n as f64)).collect()
    }

    /// Verify the sense-preserving circle-homeomorphism contract: arguments
    /// strictly increase across one period with total winding one.
    pub fn check_circle_homeomorphism(&self, n: usize) -> Result<()> {
        let vals = self.sample_uniform(n.max(16));
        let mut prev = vals[0].arg();
        let mut total = 0.0;
        for v in vals.iter().skip(1).chain([&vals[0]]) {
            if v.norm() == 0.0 {
                return Err(Error::data("boundary passes through 0"));
            }
            let a = v.arg();
            let mut da = a - prev;
            while da <= -PI {
                da += 2.0 * PI;
            }
            while da > PI {
                da -= 2.0 * PI;
            }
            if da <= 0.0 {
                return Err(Error::data("boundary argument is not strictly increasing"));
            }
            total += da;
            prev = a;
        }
        if (total - 2.0 * PI).abs() > 1e-9 {
            return Err(Error::data(format!("boundary winds {total:.6} instead of 2pi")));
        }
        Ok(())
    }

    /// Write as CSV `t,re,im` on `n` uniform nodes.
    pub fn write_csv(&self, n: usize, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "t,re,im")?;
        for j in 0..n {
            let t = 2.0 * PI * j as f64 / n as f64;
            let v = self.eval(t);
            writeln!(out, "{},{},{}", t, v.re, v.im)?;
        }
        Ok(())
    }

    /// Load from CSV `t,re,im`; the nodes must be uniform starting at 0.
    pub fn read_csv(input: &mut impl BufRead, interp: Interp) -> Result<Self> {
        let mut ts = Vec::new();
        let mut vals = Vec::new();
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty boundary file".into()))?
            .map_err(|e| Error::Parse(e.to_string()))?;
        if header.trim() != "t,re,im" {
            return Err(Error::Parse(format!("expected header 't,re,im', got '{header}'")));
        }
        for (i, line) in lines.enumerate() {
            let line = line.map_err(|e| Error::Parse(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!("row {}: expected 3 fields", i + 2)));
            }
            let parse = |s: &str| -> Result<f64> {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("row {}: {}", i + 2, e)))
            };
            ts.push(parse(fields[0])?);
            vals.push(Complex64::new(parse(fields[1])?, parse(fields[2])?));
        }
        let n = ts.len();
        if n < 8 {
            return Err(Error::Parse("boundary needs at least 8 samples".into()));
        }
        for (j, &t) in ts.iter().enumerate() {
            let expect = 2.0 * PI * j as f64 / n as f64;
            if (t - expect).abs() > 1e-9 {
                return Err(Error::Parse(format!(
                    "node {j} at t={t} is not uniform (expected {expect})"
                )));
            }
        }
        BoundaryFunction::from_samples(vals, interp)
    }
}

fn dft(values: &[Complex64]) -> Vec<Complex64> {
    let n = values.len();
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let mut buf: Vec<rustfft::num_complex::Complex<f64>> =
        values.iter().map(|v| rustfft::num_complex::Complex::new(v.re, v.im)).collect();
    fft.process(&mut buf);
    buf.into_iter().map(|c| Complex64::new(c.re, c.im) / n as f64).collect()
}

/// Evaluate the trigonometric interpolant from normalized DFT coefficients:
/// frequencies `0..=n/2` positive, the rest negative, the Nyquist bin taken
/// as a pure cosine.
fn eval_series(spectrum: &[Complex64], t: f64) -> Complex64 {
    let n = spectrum.len();
    let half = n / 2;
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, &c) in spectrum.iter().enumerate() {
        if n % 2 == 0 && k == half {
            acc += c * (half as f64 * t).cos();
            continue;
        }
        let freq = if k <= half { k as isize } else { k as isize - n as isize };
        acc += c * Complex64::from_polar(1.0, freq as f64 * t);
    }
    acc
}
