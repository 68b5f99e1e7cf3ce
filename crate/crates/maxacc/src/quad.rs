//! Adaptive Simpson quadrature. Used as an independent cross-check of
//! closed-form integrals, so it deliberately shares no code with them.

/// Integrates `f` over `[a, b]` by adaptive Simpson subdivision with
/// Richardson extrapolation.
///
/// An interval is accepted when the two-panel refinement changes the
/// estimate by less than `15 * eps`, where `eps` combines the absolute
/// budget and `rel_tol` times a first-pass estimate of the whole integral.
pub(crate) fn adaptive_simpson<F>(f: F, a: f64, b: f64, abs_tol: f64, rel_tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return 0.0;
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    let eps = abs_tol.max(rel_tol * whole.abs());
    recurse(&f, a, b, fa, fm, fb, whole, eps, 60)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> f64
where
    F: Fn(f64) -> f64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        return left + right + delta / 15.0;
    }
    recurse(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1)
        + recurse(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn integrates_polynomials_exactly() {
        // Simpson is exact on cubics, so no recursion is even needed.
        let i = adaptive_simpson(|x| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 1e-12, 1e-13);
        assert!((i - 2.0).abs() < 1e-12);
    }

    #[test]
    fn integrates_transcendentals() {
        let i = adaptive_simpson(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-12, 1e-13);
        assert!(rel(i, 2.0) < 1e-12);
        let j = adaptive_simpson(|x| (-x).exp(), 0.0, 30.0, 1e-12, 1e-13);
        assert!(rel(j, 1.0 - (-30.0f64).exp()) < 1e-11);
    }

    #[test]
    fn relative_budget_handles_large_integrands() {
        // Integral is ~2.5e7; an absolute-only 1e-12 budget would demand
        // subdivision beyond f64 resolution, the relative term keeps it sane.
        let i = adaptive_simpson(|x| x * x * x, 0.0, 100.0, 1e-12, 1e-13);
        assert!(rel(i, 2.5e7) < 1e-12);
    }

    #[test]
    fn zero_width_interval_is_zero() {
        assert_eq!(adaptive_simpson(|x| x.exp(), 3.0, 3.0, 1e-12, 1e-13), 0.0);
    }

    #[test]
    fn orientation_flips_sign() {
        let fwd = adaptive_simpson(|x| x.sin(), 0.0, 1.0, 1e-12, 1e-13);
        let rev = adaptive_simpson(|x| x.sin(), 1.0, 0.0, 1e-12, 1e-13);
        assert!((fwd + rev).abs() < 1e-13);
    }
}
