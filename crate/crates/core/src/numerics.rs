//! Small 1-D numerical routines used by the geometric constructions.

use crate::error::Error;
use crate::Result;

/// Bisection root finding for a continuous function with a sign change on
/// `[a, b]`. Returns the midpoint of the final bracket.
pub fn bisect(mut a: f64, mut b: f64, tol: f64, max_iter: usize, f: impl Fn(f64) -> f64) -> Result<f64> {
    let fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::numeric("bisection bracket has no sign change", fa.abs().min(fb.abs())));
    }
    let mut fa = fa;
    for _ in 0..max_iter {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 || (b - a).abs() < tol {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// Safeguarded Newton iteration on a sign-changing bracket `[lo, hi]`:
/// Newton steps that leave the current bracket fall back to bisection, so
/// the iteration always converges for continuous monotone residuals.
pub fn newton(
    x0: f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iter: usize,
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::numeric("newton bracket has no sign change", flo.abs().min(fhi.abs())));
    }
    let mut x = x0.clamp(lo, hi);
    let mut fx = f(x);
    for _ in 0..max_iter {
        if fx.abs() < tol || (hi - lo).abs() < f64::EPSILON * (lo.abs() + hi.abs()) {
            return Ok(x);
        }
        // Shrink the bracket with the current point.
        if fx.signum() == flo.signum() {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        let d = df(x);
        let mut next = if d != 0.0 { x - fx / d } else { f64::NAN };
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        x = next;
        fx = f(x);
    }
    if fx.abs() < tol * 1e3 {
        Ok(x)
    } else {
        Err(Error::numeric("newton iteration did not converge", fx.abs()))
    }
}

/// Golden-section minimization of a unimodal function on `[a, b]`.
pub fn golden_min(mut a: f64, mut b: f64, tol: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Minimize `f` over `[a, b]` by a coarse grid scan followed by
/// golden-section refinement around the best grid cell.
pub fn grid_min(a: f64, b: f64, grid_n: usize, tol: f64, f: impl Fn(f64) -> f64) -> (f64, f64) {
    assert!(grid_n >= 2);
    let h = (b - a) / (grid_n - 1) as f64;
    let mut best_i = 0usize;
    let mut best = f64::INFINITY;
    for i in 0..grid_n {
        let x = a + h * i as f64;
        let v = f(x);
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let lo = a + h * best_i.saturating_sub(1) as f64;
    let hi = (a + h * (best_i + 1) as f64).min(b);
    golden_min(lo, hi, tol, f)
}
