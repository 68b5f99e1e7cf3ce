//! Bracketed scalar root finding: bisection refined by secant steps.

use crate::{Error, Result};

/// Finds a root of `f` on `[lo, hi]`, which must bracket a sign change.
///
/// Each iteration tries a secant step through the current bracket endpoints
/// and falls back to the midpoint whenever the secant point is not strictly
/// inside the bracket or fails to shrink it; the bracket therefore contracts
/// at least geometrically. Terminates when the bracket width drops below
/// `rel_tol` times (1 + endpoint magnitude), so `rel_tol` doubles as the
/// absolute width floor for roots near zero, or when an evaluation hits
/// exactly zero.
pub fn bisect_secant<F>(f: F, lo: f64, hi: f64, rel_tol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) {
        return Err(Error::Domain(format!("invalid interval [{lo}, {hi}]")));
    }
    if !(rel_tol > 0.0) {
        return Err(Error::Domain(format!("relative tolerance must be positive, got {rel_tol}")));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || !fa.is_finite() || !fb.is_finite() {
        return Err(Error::NoBracket { lo: a, hi: b, f_lo: fa, f_hi: fb });
    }

    for _ in 0..max_iter {
        let scale = 1.0 + a.abs().max(b.abs());
        if (b - a) <= rel_tol * scale {
            // Midpoint of the final bracket.
            return Ok(0.5 * (a + b));
        }

        let mid = 0.5 * (a + b);
        let secant = b - fb * (b - a) / (fb - fa);
        // Accept the secant point only if it lands strictly inside and at
        // least 1% of the bracket away from both ends; otherwise bisect.
        let guard = 0.01 * (b - a);
        let x = if secant.is_finite() && secant > a + guard && secant < b - guard {
            secant
        } else {
            mid
        };

        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if !fx.is_finite() {
            return Err(Error::Domain(format!("function value not finite at {x}")));
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
    }
    Err(Error::NoConverge(max_iter))
}
