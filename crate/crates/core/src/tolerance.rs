//! Default tolerances for the verification suites and acceptance checks.
//!
//! Everything here is calibrated for `f64`. The CLI overrides individual
//! entries per flag; nothing else in the crate hard-codes these numbers.

use serde::{Deserialize, Serialize};

/// Relative error on the endpoint values W(1) and W(-1).
pub const ENDPOINT_REL: f64 = 1e-12;
/// Relative error on the identity `S^-2 A = 1/(2j+1)`.
pub const KERNEL_IDENTITY_REL: f64 = 1e-12;
/// Dense singlet pipeline vs closed form, absolute, at quadrature nodes.
pub const ORACLE_EQUIVALENCE_ABS: f64 = 1e-9;
/// Trace side vs phase-space side of the traciality condition.
pub const TRACIALITY_ABS: f64 = 1e-8;
/// `8 pi^2 * integral of W` vs one.
pub const NORMALIZATION_ABS: f64 = 1e-9;
/// `|gap (2j+1)^2 / 7.34 - 1|` for j in [5, 40).
pub const FIRST_ZERO_REL_SMALL_J: f64 = 0.10;
/// `|gap (2j+1)^2 / 7.34 - 1|` for j >= 40.
pub const FIRST_ZERO_REL_LARGE_J: f64 = 0.03;
/// Bessel asymptotic vs exact sum at j = 40 on gamma in [0.05, 1], measured
/// against the largest |W| in that window.
pub const ASYMPTOTIC_REL: f64 = 0.02;
/// Deviation of the fitted envelope exponent from 1/2.
pub const ENVELOPE_EXPONENT_ABS: f64 = 0.1;
/// Phase-space correlation vs dense trace.
pub const CORRELATION_ABS: f64 = 1e-8;

/// Constant in the first-zero law `1 - x ~ 7.34 / (2j+1)^2`.
pub const FIRST_ZERO_CONSTANT: f64 = 7.34;
/// Expected envelope exponent of the oscillations.
pub const ENVELOPE_EXPONENT: f64 = 0.5;

/// Tolerance bundle with every default in one place.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub endpoint_rel: f64,
    pub kernel_identity_rel: f64,
    pub oracle_equivalence_abs: f64,
    pub traciality_abs: f64,
    pub normalization_abs: f64,
    pub first_zero_rel_small_j: f64,
    pub first_zero_rel_large_j: f64,
    pub asymptotic_rel: f64,
    pub envelope_exponent_abs: f64,
    pub correlation_abs: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            endpoint_rel: ENDPOINT_REL,
            kernel_identity_rel: KERNEL_IDENTITY_REL,
            oracle_equivalence_abs: ORACLE_EQUIVALENCE_ABS,
            traciality_abs: TRACIALITY_ABS,
            normalization_abs: NORMALIZATION_ABS,
            first_zero_rel_small_j: FIRST_ZERO_REL_SMALL_J,
            first_zero_rel_large_j: FIRST_ZERO_REL_LARGE_J,
            asymptotic_rel: ASYMPTOTIC_REL,
            envelope_exponent_abs: ENVELOPE_EXPONENT_ABS,
            correlation_abs: CORRELATION_ABS,
        }
    }
}

impl Tolerances {
    /// First-zero tolerance for a given `2j`, or `None` below j = 5 where the
    /// large-j law is not expected to hold.
    pub fn first_zero_rel(&self, twice_j: u32) -> Option<f64> {
        match twice_j {
            0..=9 => None,
            10..=79 => Some(self.first_zero_rel_small_j),
            _ => Some(self.first_zero_rel_large_j),
        }
    }
}
