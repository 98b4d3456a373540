//! Q ↔ Weyl transform machinery.
//!
//! The Q → Weyl kernel is diagonal in the spherical-harmonic basis with
//! eigenvalue `1/S_jl` on degree `l`, so the maps here are implemented
//! spectrally: sample on a product quadrature, project onto harmonics, scale
//! each degree, resynthesize. The literal kernel integral only appears in
//! tests, as an oracle.

mod coefficients;
pub mod exact;
mod harmonic;
mod pipeline;
mod quadrature;

pub use coefficients::{a_coefficient, s_coefficient, KernelCoefficients};
pub use harmonic::{
    project_pair_to_harmonics, project_to_harmonics, HarmonicCoefficients, PairCoefficients,
    PairSamples,
};
pub use pipeline::{
    q_from_weyl, q_from_weyl_pair, q_transform_oracle, traciality_check, weyl_from_q,
    weyl_from_q_pair, weyl_symbol, wigner_normalization, wigner_normalize, Scalable, SphereSamples,
};
pub use quadrature::{build_quadrature, QuadNode, SphereQuadrature};

/// Quadrature matched to spin `j`: band limit `2j`.
pub fn quadrature_for_spin<T: crate::Real>(j: crate::SpinQuantumNumber) -> SphereQuadrature<T> {
    build_quadrature(j.twice() as usize)
}
