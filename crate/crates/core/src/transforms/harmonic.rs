use num_complex::Complex;
use rayon::prelude::*;

use crate::specfun::{harmonic_count, harmonic_index, spherical_harmonics_upto};
use crate::spin::Direction;
use crate::transforms::SphereQuadrature;
use crate::{Error, Real, Result};

/// Coefficients `c_lm`, `0 <= l <= lmax`, of a function on one sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoefficients<T> {
    lmax: usize,
    c: Vec<Complex<T>>,
}

impl<T: Real> HarmonicCoefficients<T> {
    pub fn zeros(lmax: usize) -> Self {
        Self {
            lmax,
            c: vec![Complex::new(T::zero(), T::zero()); harmonic_count(lmax)],
        }
    }

    pub fn from_vec(lmax: usize, c: Vec<Complex<T>>) -> Result<Self> {
        if c.len() != harmonic_count(lmax) {
            return Err(Error::DimensionMismatch {
                expected: harmonic_count(lmax),
                found: c.len(),
            });
        }
        Ok(Self { lmax, c })
    }

    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.c
    }

    pub fn get(&self, l: usize, m: i64) -> Complex<T> {
        self.c[harmonic_index(l, m)]
    }

    pub fn set(&mut self, l: usize, m: i64, v: Complex<T>) {
        self.c[harmonic_index(l, m)] = v;
    }

    /// Multiplies every degree-`l` block by `f(l)`.
    pub fn scale_degrees(&self, f: impl Fn(usize) -> T) -> Self {
        let mut out = self.clone();
        for l in 0..=self.lmax {
            let s = f(l);
            for m in -(l as i64)..=l as i64 {
                let k = harmonic_index(l, m);
                out.c[k] *= s;
            }
        }
        out
    }

    pub fn scaled(&self, s: T) -> Self {
        self.scale_degrees(|_| s)
    }

    /// `sum c_lm Y_lm(n)`.
    pub fn synthesize(&self, n: &Direction<T>) -> Complex<T> {
        let ys = spherical_harmonics_upto(self.lmax, n);
        self.c.iter().zip(&ys).map(|(&c, &y)| c * y).sum()
    }

    /// Values at every quadrature node.
    pub fn synthesize_on(&self, quad: &SphereQuadrature<T>) -> Vec<Complex<T>> {
        let k = harmonic_count(self.lmax.min(quad.lmax()));
        (0..quad.len())
            .map(|i| {
                self.c[..k]
                    .iter()
                    .zip(quad.harmonics_at(i))
                    .map(|(&c, &y)| c * y)
                    .sum()
            })
            .collect()
    }

    /// `max |c_{l,-m} - (-1)^m conj(c_lm)|`, zero for real functions.
    pub fn reality_residual(&self) -> T {
        let mut worst = T::zero();
        for l in 0..=self.lmax {
            for m in 1..=l as i64 {
                let sign = if m % 2 == 0 { T::one() } else { -T::one() };
                let d = self.get(l, -m) - self.get(l, m).conj() * sign;
                worst = worst.max(d.norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }
}

fn check_order<T: Real>(lmax: usize, quad: &SphereQuadrature<T>) -> Result<()> {
    if lmax > quad.lmax() {
        return Err(Error::QuadratureOrder {
            exact: quad.exact_degree(),
            required: 2 * lmax,
        });
    }
    Ok(())
}

/// `c_lm = integral conj(Y_lm) f dOmega` from node samples.
pub fn project_to_harmonics<T: Real>(
    samples: &[Complex<T>],
    lmax: usize,
    quad: &SphereQuadrature<T>,
) -> Result<HarmonicCoefficients<T>> {
    check_order(lmax, quad)?;
    if samples.len() != quad.len() {
        return Err(Error::DimensionMismatch {
            expected: quad.len(),
            found: samples.len(),
        });
    }
    let k = harmonic_count(lmax);
    let mut c = vec![Complex::new(T::zero(), T::zero()); k];
    for (i, (node, &f)) in quad.nodes().iter().zip(samples).enumerate() {
        let wf = f * node.weight;
        for (ci, y) in c.iter_mut().zip(&quad.harmonics_at(i)[..k]) {
            *ci += y.conj() * wf;
        }
    }
    Ok(HarmonicCoefficients { lmax, c })
}

/// Samples of a function on `S^2 x S^2` at all node pairs, first sphere
/// major.
#[derive(Debug, Clone, PartialEq)]
pub struct PairSamples<T> {
    n: usize,
    values: Vec<Complex<T>>,
}

impl<T: Real> PairSamples<T> {
    pub fn from_vec(n: usize, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(
        quad: &SphereQuadrature<T>,
        f: impl Fn(&Direction<T>, &Direction<T>) -> Complex<T> + Sync,
    ) -> Self {
        let n = quad.len();
        let nodes = quad.nodes();
        let values = (0..n * n)
            .into_par_iter()
            .map(|k| f(&nodes[k / n].direction, &nodes[k % n].direction))
            .collect();
        Self { n, values }
    }

    pub fn nodes_per_sphere(&self) -> usize {
        self.n
    }

    pub fn at(&self, p: usize, q: usize) -> Complex<T> {
        self.values[p * self.n + q]
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn scaled(&self, s: T) -> Self {
        Self {
            n: self.n,
            values: self.values.iter().map(|&v| v * s).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// `integral integral f dOmega_1 dOmega_2`.
    pub fn integrate(&self, quad: &SphereQuadrature<T>) -> Complex<T> {
        let nodes = quad.nodes();
        (0..self.n)
            .map(|p| {
                let row: Complex<T> = (0..self.n)
                    .map(|q| self.values[p * self.n + q] * nodes[q].weight)
                    .sum();
                row * nodes[p].weight
            })
            .sum()
    }
}

/// Coefficients `c_{(lm),(l'm')}` of a function on `S^2 x S^2` in the
/// product basis `Y_lm(n1) Y_l'm'(n2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairCoefficients<T> {
    lmax: usize,
    c: Vec<Complex<T>>,
}

impl<T: Real> PairCoefficients<T> {
    pub fn lmax(&self) -> usize {
        self.lmax
    }

    fn width(&self) -> usize {
        harmonic_count(self.lmax)
    }

    pub fn get(&self, l1: usize, m1: i64, l2: usize, m2: i64) -> Complex<T> {
        self.c[harmonic_index(l1, m1) * self.width() + harmonic_index(l2, m2)]
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.c
    }

    /// Multiplies block `(l1, l2)` by `f(l1) f(l2)`.
    pub fn scale_degrees(&self, f: impl Fn(usize) -> T) -> Self {
        let w = self.width();
        let per_index: Vec<T> = (0..=self.lmax)
            .flat_map(|l| std::iter::repeat_n(f(l), 2 * l + 1))
            .collect();
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(k, &v)| v * (per_index[k / w] * per_index[k % w]))
            .collect();
        Self { lmax: self.lmax, c }
    }

    pub fn scaled(&self, s: T) -> Self {
        Self {
            lmax: self.lmax,
            c: self.c.iter().map(|&v| v * s).collect(),
        }
    }

    /// Values at every node pair.
    pub fn synthesize_on(&self, quad: &SphereQuadrature<T>) -> PairSamples<T> {
        let w = self.width();
        let n = quad.len();
        // h_{A, q} = sum_B c_{AB} Y_B(q)
        let partial: Vec<Vec<Complex<T>>> = (0..n)
            .into_par_iter()
            .map(|q| {
                let yq = &quad.harmonics_at(q)[..w];
                (0..w)
                    .map(|a| {
                        self.c[a * w..(a + 1) * w]
                            .iter()
                            .zip(yq)
                            .map(|(&c, &y)| c * y)
                            .sum()
                    })
                    .collect()
            })
            .collect();
        let values = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (p, q) = (k / n, k % n);
                quad.harmonics_at(p)[..w]
                    .iter()
                    .zip(&partial[q])
                    .map(|(&y, &h)| y * h)
                    .sum()
            })
            .collect();
        PairSamples { n, values }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }
}

/// Two-sphere analogue of [`project_to_harmonics`].
pub fn project_pair_to_harmonics<T: Real>(
    samples: &PairSamples<T>,
    lmax: usize,
    quad: &SphereQuadrature<T>,
) -> Result<PairCoefficients<T>> {
    check_order(lmax, quad)?;
    let n = quad.len();
    if samples.n != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: samples.n,
        });
    }
    let w = harmonic_count(lmax);
    let nodes = quad.nodes();
    // g_{A, q} = sum_p w_p conj(Y_A(p)) f(p, q)
    let g: Vec<Vec<Complex<T>>> = (0..n)
        .into_par_iter()
        .map(|q| {
            let mut acc = vec![Complex::new(T::zero(), T::zero()); w];
            for (p, node) in nodes.iter().enumerate() {
                let f = samples.values[p * n + q] * node.weight;
                for (a, y) in acc.iter_mut().zip(&quad.harmonics_at(p)[..w]) {
                    *a += y.conj() * f;
                }
            }
            acc
        })
        .collect();
    let c = (0..w * w)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (k / w, k % w);
            (0..n)
                .map(|q| g[q][a] * quad.harmonics_at(q)[b].conj() * nodes[q].weight)
                .sum()
        })
        .collect();
    Ok(PairCoefficients { lmax, c })
}
