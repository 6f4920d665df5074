//! Small 1D numerical kernels: bracketing root refinement, golden-section
//! extremum search and composite Simpson quadrature.

const INV_PHI: f64 = 0.618_033_988_749_894_8; // (sqrt(5) - 1) / 2
const MAX_ITER: usize = 200;

/// Refines a sign-change bracket `[lo, hi]` of `f` by bisection until the
/// bracket is no wider than `tol`. Returns the bracket midpoint.
///
/// Returns `None` when `f(lo)` and `f(hi)` have the same strict sign.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Option<f64> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(lo);
    }
    if f_hi == 0.0 {
        return Some(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return None;
    }
    for _ in 0..MAX_ITER {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Some(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Golden-section search for a minimum of `f` on `[lo, hi]`, stopping once
/// the bracket is no wider than `tol`. Returns `(argmin, f(argmin))`.
///
/// The endpoints are candidates too, so a minimum sitting on the boundary of
/// the bracket is returned exactly.
pub fn golden_min<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..MAX_ITER {
        if b - a <= tol {
            break;
        }
        if fc <= fd {
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
    let mid = 0.5 * (a + b);
    [(lo, f(lo)), (hi, f(hi)), (mid, f(mid)), (c, fc), (d, fd)]
        .into_iter()
        .fold(
            (mid, f64::INFINITY),
            |best, cand| if cand.1 < best.1 { cand } else { best },
        )
}

/// Golden-section search for a maximum; see [`golden_min`].
pub fn golden_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let (x, v) = golden_min(|x| -f(x), lo, hi, tol);
    (x, -v)
}

/// Composite Simpson rule on `intervals` uniform sub-intervals (rounded up
/// to an even count).
pub fn simpson<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, intervals: usize) -> f64 {
    let n = (intervals.max(2) + 1) & !1;
    let h = (hi - lo) / n as f64;
    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..n {
        let v = f(lo + i as f64 * h);
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    h / 3.0 * (f(lo) + f(hi) + 4.0 * odd + 2.0 * even)
}

/// `count` points evenly spaced over `[lo, hi]`, both ends included.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (count - 1) as f64;
            (0..count)
                .map(|i| if i == count - 1 { hi } else { lo + i as f64 * step })
                .collect()
        }
    }
}

/// `count` points geometrically spaced over `[lo, hi]`, both ends included.
/// Both bounds must be positive.
pub fn logspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (l0, l1) = (lo.ln(), hi.ln());
    linspace(l0, l1, count)
        .into_iter()
        .enumerate()
        .map(|(i, l)| match i {
            0 => lo,
            _ if i == count - 1 => hi,
            _ => l.exp(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn bisect_finds_cos_root() {
        let r = bisect(f64::cos, 0.0, 3.0, 1e-14).unwrap();
        assert!((r - PI / 2.0).abs() < 1e-13);
    }

    #[test]
    fn bisect_rejects_non_bracket() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_none());
    }

    #[test]
    fn bisect_exact_endpoint() {
        assert_eq!(bisect(|x| x, 0.0, 1.0, 1e-12), Some(0.0));
    }

    #[test]
    fn golden_min_parabola() {
        let (x, v) = golden_min(|x| (x - 0.3).powi(2) + 2.0, 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn golden_min_on_boundary() {
        let (x, v) = golden_min(|x| x, 0.0, 1.0, 1e-12);
        assert_eq!(x, 0.0);
        assert_eq!(v, 0.0);
    }

    #[test]
    fn golden_max_sin() {
        let (x, v) = golden_max(f64::sin, 0.0, 3.0, 1e-12);
        assert!((x - PI / 2.0).abs() < 1e-6);
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn simpson_is_exact_for_cubics() {
        let v = simpson(|x| x * x * x - x, 0.0, 2.0, 4);
        assert!((v - 2.0).abs() < 1e-14);
    }

    #[test]
    fn simpson_sin_squared() {
        let v = simpson(|x| (PI * x).sin().powi(2), 0.0, 1.0, 2048);
        assert!((v - 0.5).abs() < 1e-14);
    }

    #[test]
    fn spacing_endpoints_exact() {
        let l = linspace(0.0, 1.0, 7);
        assert_eq!(l.len(), 7);
        assert_eq!((l[0], l[6]), (0.0, 1.0));
        let g = logspace(0.05, 1.0, 64);
        assert_eq!((g[0], g[63]), (0.05, 1.0));
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!((g[1] / g[0] - g[63] / g[62]).abs() < 1e-12);
    }
}
