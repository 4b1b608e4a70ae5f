//! Derivative-free 1-D optimization used by the rate-function code.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
/// Returns `(argmax, max)`.
pub(crate) fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..500 {
        if (hi - lo).abs() <= tol * (1.0 + c.abs()) {
            break;
        }
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = f(d);
        }
    }
    let (x, fx) = if fc >= fd { (c, fc) } else { (d, fd) };
    // The interval ends are never evaluated inside the loop; they can win
    // when the maximum sits on a boundary of a constrained search.
    [(lo, f(lo)), (hi, f(hi))]
        .into_iter()
        .fold((x, fx), |best, cand| if cand.1 > best.1 { cand } else { best })
}

/// Maximizes a concave `f` over the real line, growing the bracket
/// geometrically from `[lo, hi]`. Returns `None` when the bracket exceeds
/// `limit` in magnitude, i.e. the supremum is not attained at a finite point.
pub(crate) fn concave_sup<F: Fn(f64) -> f64>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    limit: f64,
    tol: f64,
) -> Option<(f64, f64)> {
    let mut width = hi - lo;
    while f(lo - width) > f(lo) {
        hi = lo;
        lo -= 2.0 * width;
        width *= 2.0;
        if lo.abs() > limit {
            return None;
        }
    }
    lo -= width;
    let mut width = hi - lo;
    while f(hi + width) > f(hi) {
        lo = hi;
        hi += 2.0 * width;
        width *= 2.0;
        if hi.abs() > limit {
            return None;
        }
    }
    hi += width;
    Some(golden_max(f, lo, hi, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_interior_maximum() {
        let (x, fx) = golden_max(|x| -(x - 0.3) * (x - 0.3) + 1.0, 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-8);
        assert!((fx - 1.0).abs() < 1e-15);
    }

    #[test]
    fn finds_boundary_maximum() {
        let (x, _) = golden_max(|x| x, 0.0, 1.0, 1e-12);
        assert_eq!(x, 1.0);
    }

    #[test]
    fn grows_bracket_both_ways() {
        let (x, _) = concave_sup(|x| -(x - 40.0).powi(2), -1.0, 2.0, 1e9, 1e-12).unwrap();
        assert!((x - 40.0).abs() < 1e-6);
        let (x, _) = concave_sup(|x| -(x + 75.5).powi(2), -1.0, 2.0, 1e9, 1e-12).unwrap();
        assert!((x + 75.5).abs() < 1e-6);
    }

    #[test]
    fn unbounded_gives_none() {
        assert!(concave_sup(|x| x, -1.0, 2.0, 1e6, 1e-12).is_none());
    }
}
