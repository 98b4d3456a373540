use num_complex::Complex;
use rayon::prelude::*;

use crate::spin::{coherent_state, DenseOperator, SpinContent, SpinQuantumNumber, StateVector};
use crate::transforms::{
    project_pair_to_harmonics, project_to_harmonics, HarmonicCoefficients, KernelCoefficients,
    PairCoefficients, PairSamples, SphereQuadrature,
};
use crate::{Error, Real, Result};

/// Phase-space function sampled on a [`SphereQuadrature`]: one sphere for
/// one-spin operators, all node pairs for two-spin operators.
#[derive(Debug, Clone, PartialEq)]
pub enum SphereSamples<T> {
    One(Vec<Complex<T>>),
    Two(PairSamples<T>),
}

impl<T: Real> SphereSamples<T> {
    pub fn scaled(&self, s: T) -> Self {
        match self {
            SphereSamples::One(v) => SphereSamples::One(v.iter().map(|&x| x * s).collect()),
            SphereSamples::Two(p) => SphereSamples::Two(p.scaled(s)),
        }
    }

    pub fn num_spins(&self) -> u32 {
        match self {
            SphereSamples::One(_) => 1,
            SphereSamples::Two(_) => 2,
        }
    }

    /// Largest pointwise difference; `None` if the shapes differ.
    pub fn max_abs_diff(&self, other: &Self) -> Option<T> {
        match (self, other) {
            (SphereSamples::One(a), SphereSamples::One(b)) if a.len() == b.len() => Some(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| (x - y).norm())
                    .fold(T::zero(), T::max),
            ),
            (SphereSamples::Two(a), SphereSamples::Two(b))
                if a.nodes_per_sphere() == b.nodes_per_sphere() =>
            {
                Some(a.max_abs_diff(b))
            }
            _ => None,
        }
    }
}

fn check_quadrature<T: Real>(j: SpinQuantumNumber, quad: &SphereQuadrature<T>) -> Result<()> {
    let band = j.twice() as usize;
    if quad.lmax() < band {
        return Err(Error::QuadratureOrder {
            exact: quad.exact_degree(),
            required: 2 * band,
        });
    }
    Ok(())
}

/// Q symbol `<n|F|n>` (or `<n1,n2|F|n1,n2>`) at every quadrature node,
/// straight from dense coherent states.
pub fn q_transform_oracle<T: Real>(
    f: &DenseOperator<T>,
    quad: &SphereQuadrature<T>,
) -> Result<SphereSamples<T>> {
    let j = f.content().spin();
    let states: Vec<StateVector<T>> = quad
        .nodes()
        .par_iter()
        .map(|node| coherent_state(j, &node.direction))
        .collect();
    match f.content() {
        SpinContent::One(_) => {
            let values = states
                .par_iter()
                .map(|psi| f.quadratic_form(psi))
                .collect::<Result<Vec<_>>>()?;
            Ok(SphereSamples::One(values))
        }
        SpinContent::Two(_) => {
            let d = j.dim();
            let n = states.len();
            // Contract particle 1 first: G(n1)_{kl} = sum_{ij} conj(a_i) a_j F_{(ik),(jl)}.
            let reduced: Vec<Vec<Complex<T>>> = states
                .par_iter()
                .map(|psi| {
                    let a = psi.amplitudes();
                    let mut g = vec![Complex::new(T::zero(), T::zero()); d * d];
                    for i in 0..d {
                        let ai = a[i].conj();
                        for (jj, &aj) in a.iter().enumerate() {
                            let aij = ai * aj;
                            for k in 0..d {
                                let row = (i * d + k) * d * d + jj * d;
                                for l in 0..d {
                                    g[k * d + l] += aij * f.entries()[row + l];
                                }
                            }
                        }
                    }
                    g
                })
                .collect();
            let values = (0..n * n)
                .into_par_iter()
                .map(|idx| {
                    let (p, q) = (idx / n, idx % n);
                    let g = &reduced[p];
                    let b = states[q].amplitudes();
                    let mut s = Complex::new(T::zero(), T::zero());
                    for k in 0..d {
                        let mut row = Complex::new(T::zero(), T::zero());
                        for l in 0..d {
                            row += g[k * d + l] * b[l];
                        }
                        s += b[k].conj() * row;
                    }
                    s
                })
                .collect();
            Ok(SphereSamples::Two(PairSamples::from_vec(n, values)?))
        }
    }
}

fn check_band(lmax: usize, j: SpinQuantumNumber) -> Result<()> {
    if lmax > j.twice() as usize {
        return Err(Error::BandLimit {
            lmax,
            twice_j: j.twice(),
        });
    }
    Ok(())
}

/// Q → Weyl: `c_lm -> c_lm / S_jl`.
pub fn weyl_from_q<T: Real>(
    coeffs: &HarmonicCoefficients<T>,
    j: SpinQuantumNumber,
) -> Result<HarmonicCoefficients<T>> {
    check_band(coeffs.lmax(), j)?;
    let k = KernelCoefficients::<T>::new(j);
    Ok(coeffs.scale_degrees(|l| k.s_inv(l)))
}

/// Weyl → Q: `c_lm -> S_jl c_lm`.
pub fn q_from_weyl<T: Real>(
    coeffs: &HarmonicCoefficients<T>,
    j: SpinQuantumNumber,
) -> Result<HarmonicCoefficients<T>> {
    check_band(coeffs.lmax(), j)?;
    let k = KernelCoefficients::<T>::new(j);
    Ok(coeffs.scale_degrees(|l| k.s(l)))
}

/// Q → Weyl applied on both spheres.
pub fn weyl_from_q_pair<T: Real>(
    coeffs: &PairCoefficients<T>,
    j: SpinQuantumNumber,
) -> Result<PairCoefficients<T>> {
    check_band(coeffs.lmax(), j)?;
    let k = KernelCoefficients::<T>::new(j);
    Ok(coeffs.scale_degrees(|l| k.s_inv(l)))
}

/// Weyl → Q applied on both spheres.
pub fn q_from_weyl_pair<T: Real>(
    coeffs: &PairCoefficients<T>,
    j: SpinQuantumNumber,
) -> Result<PairCoefficients<T>> {
    check_band(coeffs.lmax(), j)?;
    let k = KernelCoefficients::<T>::new(j);
    Ok(coeffs.scale_degrees(|l| k.s(l)))
}

/// `((2j+1) / 4 pi)^num_spins`, the factor turning a Weyl symbol of a
/// density matrix into its Wigner function.
pub fn wigner_normalization<T: Real>(j: SpinQuantumNumber, num_spins: u32) -> T {
    let f = T::from_usize_exact(j.dim()) / (T::lit(4.0) * T::PI());
    f.powi(num_spins as i32)
}

/// Anything that can be multiplied by a real scalar.
pub trait Scalable<T> {
    fn scaled_by(&self, s: T) -> Self;
}

impl<T: Real> Scalable<T> for HarmonicCoefficients<T> {
    fn scaled_by(&self, s: T) -> Self {
        self.scaled(s)
    }
}

impl<T: Real> Scalable<T> for PairCoefficients<T> {
    fn scaled_by(&self, s: T) -> Self {
        self.scaled(s)
    }
}

impl<T: Real> Scalable<T> for SphereSamples<T> {
    fn scaled_by(&self, s: T) -> Self {
        self.scaled(s)
    }
}

impl<T: Real> Scalable<T> for PairSamples<T> {
    fn scaled_by(&self, s: T) -> Self {
        self.scaled(s)
    }
}

impl<T: Real> Scalable<T> for Vec<Complex<T>> {
    fn scaled_by(&self, s: T) -> Self {
        self.iter().map(|&v| v * s).collect()
    }
}

impl<T: Real> Scalable<T> for T {
    fn scaled_by(&self, s: T) -> Self {
        *self * s
    }
}

/// Weyl symbol → Wigner function.
pub fn wigner_normalize<T: Real, X: Scalable<T>>(
    weyl: &X,
    j: SpinQuantumNumber,
    num_spins: u32,
) -> X {
    weyl.scaled_by(wigner_normalization(j, num_spins))
}

/// Weyl symbol of `F` at every quadrature node through the full chain:
/// dense Q symbol → harmonic projection → `1/S` scaling → resynthesis.
pub fn weyl_symbol<T: Real>(
    f: &DenseOperator<T>,
    quad: &SphereQuadrature<T>,
) -> Result<SphereSamples<T>> {
    let j = f.content().spin();
    check_quadrature(j, quad)?;
    let band = j.twice() as usize;
    match q_transform_oracle(f, quad)? {
        SphereSamples::One(q) => {
            let c = project_to_harmonics(&q, band, quad)?;
            Ok(SphereSamples::One(weyl_from_q(&c, j)?.synthesize_on(quad)))
        }
        SphereSamples::Two(q) => {
            let c = project_pair_to_harmonics(&q, band, quad)?;
            Ok(SphereSamples::Two(
                weyl_from_q_pair(&c, j)?.synthesize_on(quad),
            ))
        }
    }
}

/// Both sides of `Tr(FG)/dim = <Phi_F Phi_G>`: the trace side first, the
/// phase-space side second. Two-spin averages use the product measure
/// `dOmega_1 dOmega_2 / (4 pi)^2`.
pub fn traciality_check<T: Real>(
    f: &DenseOperator<T>,
    g: &DenseOperator<T>,
    quad: &SphereQuadrature<T>,
) -> Result<(Complex<T>, Complex<T>)> {
    if f.content() != g.content() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: g.dim(),
        });
    }
    let lhs = f.trace_product(g)? / Complex::new(T::from_usize_exact(f.dim()), T::zero());
    let four_pi = T::lit(4.0) * T::PI();
    let rhs = match (weyl_symbol(f, quad)?, weyl_symbol(g, quad)?) {
        (SphereSamples::One(a), SphereSamples::One(b)) => {
            let prod: Vec<Complex<T>> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
            quad.integrate_complex(&prod) / four_pi
        }
        (SphereSamples::Two(a), SphereSamples::Two(b)) => {
            let prod: Vec<Complex<T>> = a
                .values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| x * y)
                .collect();
            PairSamples::from_vec(a.nodes_per_sphere(), prod)?.integrate(quad) / (four_pi * four_pi)
        }
        _ => unreachable!("same spin content"),
    };
    Ok((lhs, rhs))
}
