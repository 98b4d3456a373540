//! The two-spin singlet Wigner function in closed form.
//!
//! As a function of `x = -n1.n2` it is `(1/16pi^2) sum_{l<=2j} (2l+1)
//! P_l(x)`, a degree-`2j` polynomial with its peak `(2j+1)^2/16pi^2` at
//! `x = 1`. This module evaluates it three ways (direct sum,
//! Christoffel–Darboux, Bessel asymptotic) and measures its endpoint values,
//! zeros and oscillation amplitude.

mod closed_form;
mod correlation;
mod curve;
mod report;
mod zeros;

pub use closed_form::{
    normalization, q_closed_form, wigner_asymptotic, wigner_asymptotic_at, wigner_asymptotic_peak,
    wigner_cd, wigner_exact_sum, wigner_two_sphere, LegendreSeries, CD_FALLBACK_GAP,
};
pub use correlation::{correlation_dense, correlation_expected, correlation_phase_space};
pub use curve::{
    asymptotic_deviation, chebyshev_grid, AsymptoticDeviation, Method, SingletWignerCurve,
};
pub use report::{
    envelope_exponent, envelope_max, property_report, property_report_with_exponent, PropertyCheck,
    PropertyReport, ENVELOPE_LADDER, ENVELOPE_WINDOW,
};
pub use zeros::{first_zero, first_zero_bessel_estimate, first_zero_law, zero_count, FirstZero};
