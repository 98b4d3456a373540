use num_complex::Complex;

use crate::specfun::{gauss_legendre, spherical_harmonics_upto};
use crate::spin::Direction;
use crate::Real;

/// Quadrature node on the sphere. Weights sum to `4 pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadNode<T> {
    pub direction: Direction<T>,
    pub weight: T,
}

/// Product rule: Gauss–Legendre in `cos(theta)` times a uniform azimuthal
/// grid. Spherical harmonics up to `lmax` are tabulated at every node.
#[derive(Debug, Clone)]
pub struct SphereQuadrature<T> {
    lmax: usize,
    n_theta: usize,
    n_phi: usize,
    nodes: Vec<QuadNode<T>>,
    harmonics: Vec<Vec<Complex<T>>>,
}

impl<T: Real> SphereQuadrature<T> {
    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn nodes(&self) -> &[QuadNode<T>] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    /// Highest harmonic degree integrated exactly.
    pub fn exact_degree(&self) -> usize {
        (2 * self.n_theta - 1).min(self.n_phi - 1)
    }

    /// `Y_lm` (all `l <= lmax`) at node `i`, in `harmonic_index` layout.
    pub fn harmonics_at(&self, i: usize) -> &[Complex<T>] {
        &self.harmonics[i]
    }

    /// `integral f dOmega` for real-valued node samples.
    pub fn integrate(&self, samples: &[T]) -> T {
        self.nodes
            .iter()
            .zip(samples)
            .map(|(n, &f)| n.weight * f)
            .sum()
    }

    pub fn integrate_complex(&self, samples: &[Complex<T>]) -> Complex<T> {
        self.nodes
            .iter()
            .zip(samples)
            .map(|(n, &f)| f * n.weight)
            .sum()
    }

    pub fn integrate_fn<F: Fn(&Direction<T>) -> T>(&self, f: F) -> T {
        self.nodes.iter().map(|n| n.weight * f(&n.direction)).sum()
    }

    /// Sphere average `(1/4pi) integral f dOmega`.
    pub fn average(&self, samples: &[T]) -> T {
        self.integrate(samples) / (T::lit(4.0) * T::PI())
    }
}

/// Rule with `lmax + 2` Gauss–Legendre nodes and `2 lmax + 3` azimuths,
/// exact for every product of two harmonics of degree at most `lmax`.
pub fn build_quadrature<T: Real>(lmax: usize) -> SphereQuadrature<T> {
    let n_theta = lmax + 2;
    let n_phi = 2 * lmax + 3;
    let gl = gauss_legendre::<T>(n_theta);
    let dphi = T::TAU() / T::from_usize_exact(n_phi);
    let mut nodes = Vec::with_capacity(n_theta * n_phi);
    for (&ct, &w) in gl.nodes.iter().zip(&gl.weights) {
        for k in 0..n_phi {
            let phi = dphi * T::from_usize_exact(k);
            nodes.push(QuadNode {
                direction: Direction::from_cos_theta(ct, phi),
                weight: w * dphi,
            });
        }
    }
    let harmonics = nodes
        .iter()
        .map(|n| spherical_harmonics_upto(lmax, &n.direction))
        .collect();
    SphereQuadrature {
        lmax,
        n_theta,
        n_phi,
        nodes,
        harmonics,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::harmonic_index;

    #[test]
    fn total_area() {
        for lmax in 0..10 {
            let q = build_quadrature::<f64>(lmax);
            let area: f64 = q.nodes().iter().map(|n| n.weight).sum();
            assert!((area - 4.0 * std::f64::consts::PI).abs() < 1e-12);
            assert!(q.exact_degree() >= 2 * lmax);
        }
    }

    #[test]
    fn harmonic_integrals() {
        let q = build_quadrature::<f64>(5);
        let f: Vec<Complex<f64>> = (0..q.len())
            .map(|i| q.harmonics_at(i)[harmonic_index(3, 1)])
            .collect();
        assert!(q.integrate_complex(&f).norm() < 1e-12);
        let g: Vec<f64> = (0..q.len())
            .map(|i| q.harmonics_at(i)[harmonic_index(5, 2)].norm_sqr())
            .collect();
        assert!((q.integrate(&g) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_through_twice_lmax() {
        let lmax = 4;
        let q = build_quadrature::<f64>(lmax);
        let big = build_quadrature::<f64>(2 * lmax);
        for l in 0..=2 * lmax {
            for m in -(l as i64)..=l as i64 {
                let f: Vec<Complex<f64>> = q
                    .nodes()
                    .iter()
                    .map(|n| big_y(&big, l, m, &n.direction))
                    .collect();
                let expect = if l == 0 {
                    (4.0 * std::f64::consts::PI).sqrt()
                } else {
                    0.0
                };
                assert!((q.integrate_complex(&f) - Complex::new(expect, 0.0)).norm() < 1e-12);
            }
        }
    }

    fn big_y(_: &SphereQuadrature<f64>, l: usize, m: i64, n: &Direction<f64>) -> Complex<f64> {
        crate::specfun::spherical_harmonic(l as i64, m, n).unwrap()
    }
}
