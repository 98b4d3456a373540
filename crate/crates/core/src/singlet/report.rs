use serde::{Deserialize, Serialize};

use crate::singlet::closed_form::{weighted_legendre_sum, wigner_cd, wigner_exact_sum};
use crate::singlet::zeros::{first_zero, first_zero_bessel_estimate, first_zero_law, zero_count};
use crate::spin::SpinQuantumNumber;
use crate::tolerance::{Tolerances, ENVELOPE_EXPONENT};
use crate::{Real, Result};

/// Spins used for the envelope-exponent fit: j = 5, 10, 20, 40.
pub const ENVELOPE_LADDER: [SpinQuantumNumber; 4] = [
    SpinQuantumNumber::from_twice(10),
    SpinQuantumNumber::from_twice(20),
    SpinQuantumNumber::from_twice(40),
    SpinQuantumNumber::from_twice(80),
];

/// Window `|x| <= 0.9` over which the oscillation amplitude is measured.
pub const ENVELOPE_WINDOW: f64 = 0.9;

/// `max |W(x)|` for `|x| <= 0.9`, on a grid uniform in the angle with 200
/// points per unit of `2j+1`.
pub fn envelope_max<T: Real>(j: SpinQuantumNumber) -> T {
    let lo = T::lit(ENVELOPE_WINDOW).acos();
    let hi = T::lit(-ENVELOPE_WINDOW).acos();
    let points = 200 * j.dim() + 200;
    let c = T::one() / (T::lit(16.0) * T::PI() * T::PI());
    (0..=points)
        .map(|k| {
            let g = lo + (hi - lo) * T::from_usize_exact(k) / T::from_usize_exact(points);
            (weighted_legendre_sum(j.twice(), g.cos()) * c).abs()
        })
        .fold(T::zero(), T::max)
}

/// Least-squares slope of `ln max|W|` against `ln j` over `ladder`.
pub fn envelope_exponent<T: Real>(ladder: &[SpinQuantumNumber]) -> T {
    let pts: Vec<(T, T)> = ladder
        .iter()
        .map(|&j| (j.value::<T>().ln(), envelope_max::<T>(j).ln()))
        .collect();
    let n = T::from_usize_exact(pts.len());
    let mx = pts.iter().map(|p| p.0).sum::<T>() / n;
    let my = pts.iter().map(|p| p.1).sum::<T>() / n;
    let sxy: T = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: T = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// Endpoint values, first zero, oscillation amplitude and zero count of the
/// singlet Wigner function at one spin, with the values they are expected
/// to take.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport<T> {
    pub twice_j: u32,
    pub j: String,
    /// `W(x = 1)` from the exact sum.
    pub value_a: T,
    /// `(2j+1)^2 / 16pi^2`.
    pub expected_a: T,
    /// `W(x = -1)` from the exact sum.
    pub value_b: T,
    /// `(-1)^{2j} (2j+1) / 16pi^2`.
    pub expected_b: T,
    /// `W(x = -1)` through the Christoffel–Darboux form.
    pub value_b_cd: T,
    /// Location of the first zero below the peak; `None` for j = 0.
    pub first_zero_location: Option<T>,
    /// `1 - first_zero_location`.
    pub first_zero_gap: Option<T>,
    /// `7.34 / (2j+1)^2`.
    pub first_zero_asymptotic: T,
    /// `j_{1,1}^2 / (2 (2j+1)^2)` with the computed Bessel root.
    pub first_zero_bessel: T,
    /// `max |W|` for `|x| <= 0.9`.
    pub envelope_max: T,
    /// Fitted exponent over [`ENVELOPE_LADDER`].
    pub envelope_exponent: T,
    pub zero_count: usize,
    /// `2j`.
    pub expected_zero_count: usize,
}

/// Outcome of one report field against its tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub field: &'static str,
    pub value: f64,
    pub expected: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl PropertyCheck {
    fn new(field: &'static str, value: f64, expected: f64, residual: f64, tolerance: f64) -> Self {
        Self {
            field,
            value,
            expected,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

/// Builds the report for `j` using [`ENVELOPE_LADDER`] for the exponent.
pub fn property_report<T: Real>(j: SpinQuantumNumber) -> Result<PropertyReport<T>> {
    let exponent = envelope_exponent::<T>(&ENVELOPE_LADDER);
    property_report_with_exponent(j, exponent)
}

/// As [`property_report`], with an exponent computed once by the caller.
pub fn property_report_with_exponent<T: Real>(
    j: SpinQuantumNumber,
    envelope_exponent: T,
) -> Result<PropertyReport<T>> {
    let n = T::from_usize_exact(j.dim());
    let c = T::one() / (T::lit(16.0) * T::PI() * T::PI());
    let zero = if j.twice() == 0 {
        None
    } else {
        Some(first_zero::<T>(j)?)
    };
    Ok(PropertyReport {
        twice_j: j.twice(),
        j: j.to_string(),
        value_a: wigner_exact_sum(j, T::one())?,
        expected_a: n * n * c,
        value_b: wigner_exact_sum(j, -T::one())?,
        expected_b: j.parity_sign::<T>() * n * c,
        value_b_cd: wigner_cd(j, -T::one())?,
        first_zero_location: zero.map(|z| z.x),
        first_zero_gap: zero.map(|z| z.gap),
        first_zero_asymptotic: first_zero_law(j),
        first_zero_bessel: first_zero_bessel_estimate(j),
        envelope_max: envelope_max(j),
        envelope_exponent,
        zero_count: zero_count::<T>(j),
        expected_zero_count: j.twice() as usize,
    })
}

impl<T: Real> PropertyReport<T> {
    /// Every check that applies at this spin. The first-zero law is only
    /// checked from j = 5 upwards.
    pub fn checks(&self, tol: &Tolerances) -> Vec<PropertyCheck> {
        let f = |v: T| v.to_f64().unwrap_or(f64::NAN);
        let rel = |a: T, b: T| (f(a) / f(b) - 1.0).abs();
        let mut out = vec![
            PropertyCheck::new(
                "value_a",
                f(self.value_a),
                f(self.expected_a),
                rel(self.value_a, self.expected_a),
                tol.endpoint_rel,
            ),
            PropertyCheck::new(
                "value_b",
                f(self.value_b),
                f(self.expected_b),
                rel(self.value_b, self.expected_b),
                tol.endpoint_rel,
            ),
            PropertyCheck::new(
                "value_b_cd",
                f(self.value_b_cd),
                f(self.expected_b),
                rel(self.value_b_cd, self.expected_b),
                tol.endpoint_rel,
            ),
            PropertyCheck::new(
                "zero_count",
                self.zero_count as f64,
                self.expected_zero_count as f64,
                (self.zero_count as f64 - self.expected_zero_count as f64).abs(),
                0.0,
            ),
            PropertyCheck::new(
                "envelope_exponent",
                f(self.envelope_exponent),
                ENVELOPE_EXPONENT,
                (f(self.envelope_exponent) - ENVELOPE_EXPONENT).abs(),
                tol.envelope_exponent_abs,
            ),
        ];
        if let (Some(gap), Some(t)) = (self.first_zero_gap, tol.first_zero_rel(self.twice_j)) {
            out.push(PropertyCheck::new(
                "first_zero_gap",
                f(gap),
                f(self.first_zero_asymptotic),
                rel(gap, self.first_zero_asymptotic),
                t,
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn spin_five_report() {
        let r: PropertyReport<f64> = property_report(SpinQuantumNumber::integer(5)).unwrap();
        let c = 1.0 / (16.0 * PI * PI);
        assert!((r.value_a - 121.0 * c).abs() < 1e-13);
        assert!((r.value_b - 11.0 * c).abs() < 1e-14);
        assert_eq!(r.zero_count, 10);
        assert!(r.checks(&Tolerances::default()).iter().all(|c| c.pass));
        assert_eq!(r.j, "5");
    }

    #[test]
    fn half_integer_parity() {
        let r: PropertyReport<f64> = property_report(SpinQuantumNumber::from_twice(19)).unwrap();
        assert!(r.value_b < 0.0);
        assert!((r.value_b + 20.0 / (16.0 * PI * PI)).abs() < 1e-14);
    }

    #[test]
    fn spin_zero_has_no_zero() {
        let r: PropertyReport<f64> = property_report(SpinQuantumNumber::ZERO).unwrap();
        assert_eq!(r.first_zero_gap, None);
        assert_eq!(r.zero_count, 0);
        assert!(r.checks(&Tolerances::default()).iter().all(|c| c.pass));
    }

    #[test]
    fn envelope_grows_like_sqrt_j() {
        let e: f64 = envelope_exponent(&ENVELOPE_LADDER);
        assert!((e - 0.5).abs() < 0.1, "{e}");
    }

    #[test]
    fn spin_half_gap() {
        let r: PropertyReport<f64> = property_report(SpinQuantumNumber::HALF).unwrap();
        assert!((r.first_zero_gap.unwrap() - 4.0 / 3.0).abs() < 1e-12);
        // large-j law is not checked this low
        assert!(r
            .checks(&Tolerances::default())
            .iter()
            .all(|c| c.field != "first_zero_gap"));
    }
}
