//! Arc-length sampled polyline curves.

use crate::error::Error;
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::io::{BufRead, Write};

/// A discretized planar curve with cumulative chord-summed arc length.
///
/// Curves are polylines: no interpolation beyond straight segments is ever
/// assumed, so every supremum estimated over a `SampledCurve` is a lower
/// bound of the continuum value. For closed curves the first point is not
/// repeated in storage; closure is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    points: Vec<Complex64>,
    cum_length: Vec<f64>,
    closed: bool,
}

impl SampledCurve {
    /// Build a curve from its sample points, computing arc length by chord
    /// summation. Consecutive points must be distinct and finite.
    pub fn new(points: Vec<Complex64>, closed: bool) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::data("a curve needs at least two samples"));
        }
        for p in &points {
            if !p.re.is_finite() || !p.im.is_finite() {
                return Err(Error::data("curve sample is not finite"));
            }
        }
        let mut cum = Vec::with_capacity(points.len());
        cum.push(0.0);
        for w in points.windows(2) {
            let step = (w[1] - w[0]).norm();
            if step == 0.0 {
                return Err(Error::data("consecutive curve samples coincide"));
            }
            cum.push(cum.last().unwrap() + step);
        }
        if closed && (points[0] - points[points.len() - 1]).norm() == 0.0 {
            return Err(Error::data("closed curve must not repeat its first point"));
        }
        Ok(SampledCurve {
            points,
            cum_length: cum,
            closed,
        })
    }

    /// As `new`, but with explicitly supplied cumulative lengths (used by the
    /// CSV loader so round-trips are exact).
    pub fn with_lengths(points: Vec<Complex64>, cum_length: Vec<f64>, closed: bool) -> Result<Self> {
        if points.len() != cum_length.len() {
            return Err(Error::data("points and arc lengths differ in count"));
        }
        if points.len() < 2 {
            return Err(Error::data("a curve needs at least two samples"));
        }
        if cum_length[0] != 0.0 {
            return Err(Error::data("arc length must start at 0"));
        }
        for w in cum_length.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::data("arc length must be strictly increasing"));
            }
        }
        Ok(SampledCurve {
            points,
            cum_length,
            closed,
        })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn cum_length(&self) -> &[f64] {
        &self.cum_length
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Total length, including the closing chord for closed curves.
    pub fn total_length(&self) -> f64 {
        let open = *self.cum_length.last().unwrap();
        if self.closed {
            open + (self.points[0] - self.points[self.points.len() - 1]).norm()
        } else {
            open
        }
    }

    /// Unit-speed tangent estimates at every sample: central differences in
    /// arc length, one-sided at the endpoints of open curves, wrapping around
    /// for closed ones.
    pub fn tangents(&self) -> Vec<Complex64> {
        let n = self.points.len();
        let l = self.total_length();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let (prev, next, ds) = if self.closed {
                let ip = (i + n - 1) % n;
                let inx = (i + 1) % n;
                let sp = if i == 0 { self.cum_length[n - 1] - l } else { self.cum_length[ip] };
                let sn = if i == n - 1 { l } else { self.cum_length[inx] };
                (self.points[ip], self.points[inx], sn - sp)
            } else if i == 0 {
                (self.points[0], self.points[1], self.cum_length[1])
            } else if i == n - 1 {
                (
                    self.points[n - 2],
                    self.points[n - 1],
                    self.cum_length[n - 1] - self.cum_length[n - 2],
                )
            } else {
                (
                    self.points[i - 1],
                    self.points[i + 1],
                    self.cum_length[i + 1] - self.cum_length[i - 1],
                )
            };
            out.push((next - prev) / ds);
        }
        out
    }

    /// Winding number of the closed polyline around `q`, by summing signed
    /// turn angles. `q` must not lie on the polyline.
    pub fn winding_number(&self, q: Complex64) -> i32 {
        let n = self.points.len();
        let mut total = 0.0;
        for i in 0..n {
            let a = self.points[i] - q;
            let b = self.points[(i + 1) % n] - q;
            let cross = a.re * b.im - a.im * b.re;
            let dot = a.re * b.re + a.im * b.im;
            total += cross.atan2(dot);
        }
        (total / (2.0 * PI)).round() as i32
    }

    /// Euclidean distance from `q` to the polyline (closing segment included
    /// for closed curves).
    pub fn distance_to(&self, q: Complex64) -> f64 {
        let n = self.points.len();
        let segs = if self.closed { n } else { n - 1 };
        let mut best = f64::INFINITY;
        for i in 0..segs {
            let a = self.points[i];
            let b = self.points[(i + 1) % n];
            best = best.min(dist_point_segment(q, a, b));
        }
        best
    }

    /// Map every sample through `f`, recomputing arc length.
    pub fn map(&self, mut f: impl FnMut(Complex64) -> Complex64) -> Result<SampledCurve> {
        SampledCurve::new(self.points.iter().map(|&z| f(z)).collect(), self.closed)
    }

    /// Write as CSV with header `re,im,s`.
    pub fn write_csv(&self, out: &mut impl Write) -> std::io::Result<()> {
        writeln!(out, "re,im,s")?;
        for (p, s) in self.points.iter().zip(&self.cum_length) {
            writeln!(out, "{},{},{}", p.re, p.im, s)?;
        }
        Ok(())
    }

    /// Read back the `re,im,s` CSV format. Closedness is not stored in the
    /// format; the caller states it.
    pub fn read_csv(input: &mut impl BufRead, closed: bool) -> Result<SampledCurve> {
        let mut points = Vec::new();
        let mut lengths = Vec::new();
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty curve file".into()))?
            .map_err(|e| Error::Parse(e.to_string()))?;
        if header.trim() != "re,im,s" {
            return Err(Error::Parse(format!("expected header 're,im,s', got '{header}'")));
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
            points.push(Complex64::new(parse(fields[0])?, parse(fields[1])?));
            lengths.push(parse(fields[2])?);
        }
        SampledCurve::with_lengths(points, lengths, closed)
    }
}

fn dist_point_segment(q: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (q - a).norm();
    }
    let t = (((q - a).re * ab.re + (q - a).im * ab.im) / len2).clamp(0.0, 1.0);
    (q - (a + ab * t)).norm()
}

/// Uniformly sampled circle, counterclockwise from angle 0.
pub(crate) fn circle_curve(center: Complex64, radius: f64, n: usize) -> SampledCurve {
    let pts = (0..n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64;
            center + Complex64::from_polar(radius, t)
        })
        .collect();
    SampledCurve::new(pts, true).expect("circle samples are distinct")
}

/// Discretized graph of `y = c*|x|^(1+mu)` over `[-x0, x0]`.
///
/// `n` is the number of samples per side; the total count is `2n + 1` with
/// the origin shared, so the vertex is always an exact sample.
pub fn build_graph_curve(c: f64, mu: f64, x0: f64, n: usize) -> Result<SampledCurve> {
    check_cusp_params(c, mu)?;
    if !(x0 > 0.0) {
        return Err(Error::parameter("x0 must be positive"));
    }
    if n < 16 {
        return Err(Error::parameter("need at least 16 samples per side"));
    }
    let mut pts = Vec::with_capacity(2 * n + 1);
    for i in 0..=(2 * n) {
        let x = -x0 + x0 * i as f64 / n as f64;
        let y = c * x.abs().powf(1.0 + mu);
        pts.push(Complex64::new(x, y));
    }
    // Force the vertex exactly onto the origin.
    pts[n] = Complex64::new(0.0, 0.0);
    SampledCurve::new(pts, false)
}

/// Polar two-branch cusp curve: the right branch `phi = c*r^mu` joined at the
/// origin with the left branch `pi - phi = c*r^mu`, oriented left-to-right
/// through 0.
///
/// `n` is the number of samples per branch; the total count is `2n + 1`.
pub fn build_gamma_curve(c: f64, mu: f64, r0: f64, n: usize) -> Result<SampledCurve> {
    check_cusp_params(c, mu)?;
    if !(r0 > 0.0) {
        return Err(Error::parameter("r0 must be positive"));
    }
    if c * r0.powf(mu) >= PI / 2.0 {
        return Err(Error::parameter("admissibility c*r0^mu < pi/2 violated"));
    }
    if n < 16 {
        return Err(Error::parameter("need at least 16 samples per branch"));
    }
    let mut pts = Vec::with_capacity(2 * n + 1);
    // Left branch, from r0 in to the origin: arg = pi - c r^mu.
    for i in 0..n {
        let r = r0 * (n - i) as f64 / n as f64;
        pts.push(Complex64::from_polar(r, PI - c * r.powf(mu)));
    }
    pts.push(Complex64::new(0.0, 0.0));
    // Right branch, origin out to r0: arg = c r^mu.
    for i in 1..=n {
        let r = r0 * i as f64 / n as f64;
        pts.push(Complex64::from_polar(r, c * r.powf(mu)));
    }
    SampledCurve::new(pts, false)
}

pub(crate) fn check_cusp_params(c: f64, mu: f64) -> Result<()> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::parameter("opening constant c must be positive"));
    }
    if !(mu > 0.0 && mu < 1.0) {
        return Err(Error::parameter("exponent mu must lie in (0,1)"));
    }
    Ok(())
}
