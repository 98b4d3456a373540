//! Spin-j phase-space transforms on the unit sphere.
//!
//! The crate computes Q (Husimi) and Weyl symbols of spin operators, maps
//! between them with the diagonal kernel in the spherical-harmonic basis, and
//! evaluates the Wigner function of the two-spin singlet in closed form,
//! through the Christoffel–Darboux sum and through its Bessel asymptotic.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`). The `*64` type
//! aliases at the crate root pin the scalar to `f64`, which is what the
//! tolerances in [`tolerance`] are calibrated for. Spin quantum numbers are
//! always exact: [`SpinQuantumNumber`] stores the integer `2j`.
//!
//! Module map:
//! - [`specfun`]: Legendre polynomials, spherical harmonics, Wigner small-d,
//!   Bessel `J1`, log-factorials and Gauss–Legendre nodes.
//! - [`spin`]: dense spin algebra, coherent states and the singlet (the
//!   brute-force oracle layer).
//! - [`transforms`]: kernel coefficients, sphere quadrature, harmonic
//!   projection, Q ↔ Weyl maps and the traciality check.
//! - [`singlet`]: closed forms, asymptotics, zeros and the property report.

pub mod error;
pub mod roots;
pub mod scalar;
pub mod singlet;
pub mod specfun;
pub mod spin;
pub mod tolerance;
pub mod transforms;

pub use error::{Error, Result};
pub use scalar::Real;
pub use spin::{DenseOperator, Direction, SpinContent, SpinQuantumNumber, StateVector};

pub use num_complex::Complex;

pub type C64 = Complex<f64>;

pub type Direction64 = Direction<f64>;
pub type Direction32 = Direction<f32>;
pub type DenseOperator64 = DenseOperator<f64>;
pub type StateVector64 = StateVector<f64>;
pub type LegendreTable64 = specfun::LegendreTable<f64>;
pub type WignerDMatrix64 = specfun::WignerDMatrix<f64>;
pub type SphereQuadrature64 = transforms::SphereQuadrature<f64>;
pub type HarmonicCoefficients64 = transforms::HarmonicCoefficients<f64>;
pub type PairCoefficients64 = transforms::PairCoefficients<f64>;
pub type KernelCoefficients64 = transforms::KernelCoefficients<f64>;
pub type SingletWignerCurve64 = singlet::SingletWignerCurve<f64>;
pub type PropertyReport64 = singlet::PropertyReport<f64>;
