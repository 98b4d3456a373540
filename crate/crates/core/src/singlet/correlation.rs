use rayon::prelude::*;

use crate::singlet::closed_form::wigner_cd;
use crate::spin::{correlation_operator, expectation, singlet_density, SpinQuantumNumber};
use crate::transforms::build_quadrature;
use crate::{Direction, Real, Result};

/// `-(j(j+1)/3) a.b`, the singlet correlation of `J.a` on the first spin
/// with `J.b` on the second.
pub fn correlation_expected<T: Real>(
    j: SpinQuantumNumber,
    a: &Direction<T>,
    b: &Direction<T>,
) -> T {
    -j.casimir::<T>() / T::lit(3.0) * a.dot(b)
}

/// Singlet correlation as a phase-space integral,
/// `integral W(n1, n2) Phi_a(n1) Phi_b(n2) dOmega_1 dOmega_2` with
/// `Phi_a(n) = sqrt(j(j+1)) a.n` the Weyl symbol of `J.a` and `W` the closed
/// form. The product rule resolves `lmax = max(2j, 1)` on each sphere.
pub fn correlation_phase_space<T: Real>(
    j: SpinQuantumNumber,
    a: &Direction<T>,
    b: &Direction<T>,
) -> Result<T> {
    let quad = build_quadrature::<T>((j.twice() as usize).max(1));
    let nodes = quad.nodes();
    let root = j.casimir::<T>().sqrt();
    let fb: Vec<T> = nodes.iter().map(|q| root * b.dot(&q.direction)).collect();
    let partial = nodes
        .par_iter()
        .map(|p| {
            let fa = root * a.dot(&p.direction);
            let mut s = T::zero();
            for (q, &g) in nodes.iter().zip(&fb) {
                let x = -p.direction.dot(&q.direction);
                s += q.weight * wigner_cd(j, x)? * g;
            }
            Ok(p.weight * fa * s)
        })
        .collect::<Result<Vec<T>>>()?;
    Ok(partial.into_iter().sum())
}

/// `Tr(rho_singlet (J.a) ⊗ (J.b))` from dense matrices.
pub fn correlation_dense<T: Real>(
    j: SpinQuantumNumber,
    a: &Direction<T>,
    b: &Direction<T>,
) -> Result<T> {
    let rho = singlet_density::<T>(j);
    let f = correlation_operator(j, a.to_array(), b.to_array());
    Ok(expectation(&rho, &f)?.re)
}
