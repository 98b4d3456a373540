//! Special functions used throughout the crate.
//!
//! All of them are pure and allocation-light. Legendre polynomials use the
//! upward three-term recurrence, which is stable on `[-1, 1]`.

mod bessel;
mod factorial;
mod gauss;
mod harmonics;
mod legendre;
mod wigner_d;

pub use bessel::{bessel_j1, bessel_j1_zero, BESSEL_J1_SERIES_LIMIT};
pub use factorial::log_factorial;
pub use gauss::{clenshaw_curtis, gauss_legendre, GaussRule};
pub use harmonics::{harmonic_count, harmonic_index, spherical_harmonic, spherical_harmonics_upto};
pub use legendre::{legendre, legendre_all, legendre_pair, LegendreTable};
pub use wigner_d::{wigner_d, wigner_d_element, WignerDMatrix};
