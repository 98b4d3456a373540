use serde::{Deserialize, Serialize};

use crate::roots::bisect;
use crate::singlet::closed_form::weighted_legendre_sum;
use crate::specfun::bessel_j1_zero;
use crate::spin::SpinQuantumNumber;
use crate::tolerance::FIRST_ZERO_CONSTANT;
use crate::{Error, Real, Result};

/// First zero of the singlet Wigner function below its peak at `x = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FirstZero<T> {
    pub x: T,
    /// `1 - x`.
    pub gap: T,
}

/// Locates the first sign change of the exact sum moving down from `x = 1`:
/// scan with step `0.1 / (2j+1)^2`, then bisect to `1e-12`.
pub fn first_zero<T: Real>(j: SpinQuantumNumber) -> Result<FirstZero<T>> {
    if j.twice() == 0 {
        return Err(Error::Domain {
            value: 0.0,
            domain: "2j >= 1",
        });
    }
    let tj = j.twice();
    let n = T::from_usize_exact(j.dim());
    let step = T::lit(0.1) / (n * n);
    let f = |x: T| weighted_legendre_sum(tj, x);
    let mut hi = T::one();
    let mut k = 1usize;
    loop {
        let lo = (T::one() - step * T::from_usize_exact(k)).max(-T::one());
        if f(lo) <= T::zero() {
            let x = bisect(f, lo, hi, T::lit(1e-12).max(T::epsilon() * T::lit(4.0)));
            return Ok(FirstZero {
                x,
                gap: T::one() - x,
            });
        }
        if lo == -T::one() {
            // Unreachable for 2j >= 1: the polynomial has 2j zeros in (-1, 1).
            return Err(Error::Domain {
                value: tj as f64,
                domain: "spin with a zero in [-1, 1]",
            });
        }
        hi = lo;
        k += 1;
    }
}

/// Large-j estimate `j_{1,1}^2 / (2 (2j+1)^2)` with the computed Bessel root.
pub fn first_zero_bessel_estimate<T: Real>(j: SpinQuantumNumber) -> T {
    let z: T = bessel_j1_zero(1);
    let n = T::from_usize_exact(j.dim());
    z * z / (T::lit(2.0) * n * n)
}

/// `7.34 / (2j+1)^2`, the reported constant.
pub fn first_zero_law<T: Real>(j: SpinQuantumNumber) -> T {
    let n = T::from_usize_exact(j.dim());
    T::lit(FIRST_ZERO_CONSTANT) / (n * n)
}

/// Number of sign changes of the exact sum on `[-1, 1]`.
///
/// The grid is uniform in the angle `g` (`x = cos g`), which clusters points
/// near both endpoints where the zeros crowd together.
pub fn zero_count<T: Real>(j: SpinQuantumNumber) -> usize {
    let tj = j.twice();
    let points = 20 * j.dim() + 20;
    let mut count = 0;
    let mut prev = weighted_legendre_sum(tj, T::one());
    for k in 1..=points {
        let x = if k == points {
            -T::one()
        } else {
            (T::PI() * T::from_usize_exact(k) / T::from_usize_exact(points)).cos()
        };
        let v = weighted_legendre_sum(tj, x);
        if v == T::zero() {
            // Exact zero on the grid: the next nonzero sample decides.
            continue;
        }
        if (v < T::zero()) != (prev < T::zero()) {
            count += 1;
        }
        prev = v;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sj(tj: u32) -> SpinQuantumNumber {
        SpinQuantumNumber::from_twice(tj)
    }

    #[test]
    fn spin_half_linear_case() {
        let z: FirstZero<f64> = first_zero(SpinQuantumNumber::HALF).unwrap();
        assert!((z.x + 1.0 / 3.0).abs() < 1e-12);
        assert!((z.gap - 4.0 / 3.0).abs() < 1e-12);
        assert!(first_zero::<f64>(SpinQuantumNumber::ZERO).is_err());
    }

    #[test]
    fn spin_one_quadratic_case() {
        // 1 + 3x + 5 P_2(x) = (15x^2 + 6x - 3)/2, roots (-1 ± sqrt(6))/5
        let z: FirstZero<f64> = first_zero(sj(2)).unwrap();
        assert!((z.x - (-1.0 + 6f64.sqrt()) / 5.0).abs() < 1e-12);
        assert_eq!(zero_count::<f64>(sj(2)), 2);
    }

    #[test]
    fn law_at_five_and_forty() {
        for (tj, tol) in [(10, 0.10), (80, 0.03)] {
            let z: FirstZero<f64> = first_zero(sj(tj)).unwrap();
            let n = (tj + 1) as f64;
            assert!((z.gap * n * n / 7.34 - 1.0).abs() < tol);
        }
        let g: f64 = first_zero::<f64>(sj(80)).unwrap().gap;
        assert!((g - 1.119e-3).abs() / 1.119e-3 < 0.03);
    }

    #[test]
    fn bessel_estimate_matches_reported_constant() {
        let j = sj(80);
        let a: f64 = first_zero_bessel_estimate(j);
        let b: f64 = first_zero_law(j);
        assert!((a / b - 1.0).abs() < 1e-3);
    }

    #[test]
    fn counts() {
        assert_eq!(zero_count::<f64>(sj(0)), 0);
        assert_eq!(zero_count::<f64>(sj(10)), 10);
        for tj in 0..=80 {
            assert_eq!(zero_count::<f64>(sj(tj)), tj as usize);
        }
    }
}
