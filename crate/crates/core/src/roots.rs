//! Bracketing root finders shared by the zero-location code.

use crate::Real;

/// Bisection on `[lo, hi]` where `f(lo)` and `f(hi)` have opposite signs
/// (or one of them is zero). Stops once the bracket is narrower than `xtol`.
pub fn bisect<T: Real, F: Fn(T) -> T>(f: F, mut lo: T, mut hi: T, xtol: T) -> T {
    let mut flo = f(lo);
    if flo == T::zero() {
        return lo;
    }
    if f(hi) == T::zero() {
        return hi;
    }
    let half = T::lit(0.5);
    for _ in 0..400 {
        if (hi - lo).abs() <= xtol {
            break;
        }
        let mid = lo + (hi - lo) * half;
        let fmid = f(mid);
        if fmid == T::zero() {
            return mid;
        }
        if (fmid < T::zero()) == (flo < T::zero()) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    lo + (hi - lo) * half
}
