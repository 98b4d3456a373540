use num_complex::Complex;

use crate::spin::Direction;
use crate::{Error, Real, Result};

/// Flat index of `(l, m)` in the `l^2 + l + m` layout.
#[inline]
pub fn harmonic_index(l: usize, m: i64) -> usize {
    ((l * l + l) as i64 + m) as usize
}

/// Number of harmonics with `l <= lmax`.
#[inline]
pub fn harmonic_count(lmax: usize) -> usize {
    (lmax + 1) * (lmax + 1)
}

/// All orthonormal `Y_lm(n)` with `l <= lmax`, Condon–Shortley phase, in the
/// [`harmonic_index`] layout.
///
/// Uses the fully normalized associated-Legendre recurrence, which stays
/// bounded for any degree.
pub fn spherical_harmonics_upto<T: Real>(lmax: usize, n: &Direction<T>) -> Vec<Complex<T>> {
    let z = n.z();
    let s = n.sin_theta();
    let (cphi, sphi) = if s > T::zero() {
        (n.x() / s, n.y() / s)
    } else {
        (T::one(), T::zero())
    };
    let eiphi = Complex::new(cphi, sphi);

    let mut out = vec![Complex::new(T::zero(), T::zero()); harmonic_count(lmax)];
    let two = T::lit(2.0);
    let mut pmm = T::one() / (T::lit(4.0) * T::PI()).sqrt();
    let mut phase = Complex::new(T::one(), T::zero());
    for m in 0..=lmax {
        let mf = T::from_usize_exact(m);
        if m > 0 {
            pmm = -pmm * s * ((two * mf + T::one()) / (two * mf)).sqrt();
            phase *= eiphi;
        }
        let mut prev2 = T::zero();
        let mut prev = pmm;
        store(&mut out, m, m, prev, phase);
        if m < lmax {
            let next = (two * mf + T::lit(3.0)).sqrt() * z * pmm;
            prev2 = prev;
            prev = next;
            store(&mut out, m + 1, m, prev, phase);
        }
        let mut a_prev = (two * mf + T::lit(3.0)).sqrt();
        for l in (m + 2)..=lmax {
            let lf = T::from_usize_exact(l);
            let a = ((T::lit(4.0) * lf * lf - T::one()) / (lf * lf - mf * mf)).sqrt();
            let next = a * (z * prev - prev2 / a_prev);
            prev2 = prev;
            prev = next;
            a_prev = a;
            store(&mut out, l, m, prev, phase);
        }
    }
    out
}

fn store<T: Real>(out: &mut [Complex<T>], l: usize, m: usize, p: T, phase: Complex<T>) {
    let y = phase * p;
    out[harmonic_index(l, m as i64)] = y;
    if m > 0 {
        let yneg = if m.is_multiple_of(2) {
            y.conj()
        } else {
            -y.conj()
        };
        out[harmonic_index(l, -(m as i64))] = yneg;
    }
}

/// Orthonormal spherical harmonic `Y_lm(n)`.
pub fn spherical_harmonic<T: Real>(l: i64, m: i64, n: &Direction<T>) -> Result<Complex<T>> {
    if l < 0 || m.abs() > l {
        return Err(Error::HarmonicIndex { l, m });
    }
    let all = spherical_harmonics_upto(l as usize, n);
    Ok(all[harmonic_index(l as usize, m)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{gauss_legendre, legendre};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_direction(rng: &mut impl Rng) -> Direction<f64> {
        Direction::from_cos_theta(rng.gen_range(-1.0..1.0), rng.gen_range(0.0..2.0 * PI))
    }

    #[test]
    fn constant_harmonic() {
        let n = Direction::from_angles(0.4_f64, 2.0);
        let y = spherical_harmonic(0, 0, &n).unwrap();
        assert!((y.re - 0.28209479177387814).abs() < 1e-15);
        assert_eq!(y.im, 0.0);
    }

    #[test]
    fn index_error() {
        let n = Direction::<f64>::z_axis();
        assert!(matches!(
            spherical_harmonic(1, 2, &n),
            Err(Error::HarmonicIndex { .. })
        ));
        assert!(spherical_harmonic(-1, 0, &n).is_err());
    }

    #[test]
    fn explicit_low_order() {
        let n = Direction::from_angles(0.7_f64, 1.3);
        let (st, ct) = (0.7f64.sin(), 0.7f64.cos());
        let y10 = spherical_harmonic(1, 0, &n).unwrap();
        assert!((y10.re - (3.0 / (4.0 * PI)).sqrt() * ct).abs() < 1e-15);
        let y11 = spherical_harmonic(1, 1, &n).unwrap();
        let expect = -(3.0 / (8.0 * PI)).sqrt() * st;
        assert!((y11.re - expect * 1.3f64.cos()).abs() < 1e-15);
        assert!((y11.im - expect * 1.3f64.sin()).abs() < 1e-15);
        let y2m2 = spherical_harmonic(2, -2, &n).unwrap();
        let e = 0.25 * (15.0 / (2.0 * PI)).sqrt() * st * st;
        assert!((y2m2.re - e * (2.6f64).cos()).abs() < 1e-15);
        assert!((y2m2.im + e * (2.6f64).sin()).abs() < 1e-15);
        let north = Direction::<f64>::z_axis();
        let v = spherical_harmonic(1, 0, &north).unwrap();
        assert!((v.re - (3.0 / (4.0 * PI)).sqrt()).abs() < 1e-15);
    }

    /// Orthonormality through a product rule built here, independent of the
    /// transforms module.
    #[test]
    fn orthonormal_under_product_quadrature() {
        let lmax = 6;
        let gl = gauss_legendre::<f64>(lmax + 2);
        let nphi = 2 * lmax + 3;
        let mut gram =
            vec![vec![Complex::new(0.0, 0.0); harmonic_count(lmax)]; harmonic_count(lmax)];
        for (&ct, &w) in gl.nodes.iter().zip(&gl.weights) {
            for k in 0..nphi {
                let phi = 2.0 * PI * k as f64 / nphi as f64;
                let ys = spherical_harmonics_upto(lmax, &Direction::from_cos_theta(ct, phi));
                let wt = w * 2.0 * PI / nphi as f64;
                for a in 0..ys.len() {
                    for b in 0..ys.len() {
                        gram[a][b] += ys[a].conj() * ys[b] * wt;
                    }
                }
            }
        }
        for (a, row) in gram.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((v - expect).norm() < 1e-12, "({a},{b}) {v}");
            }
        }
    }

    #[test]
    fn addition_theorem() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n1 = random_direction(&mut rng);
            let n2 = random_direction(&mut rng);
            let y1 = spherical_harmonics_upto(20, &n1);
            let y2 = spherical_harmonics_upto(20, &n2);
            for l in 0..=20usize {
                let s: Complex<f64> = (-(l as i64)..=l as i64)
                    .map(|m| y1[harmonic_index(l, m)] * y2[harmonic_index(l, m)].conj())
                    .sum();
                let expect = (2 * l + 1) as f64 / (4.0 * PI) * legendre(l, n1.dot(&n2)).unwrap();
                assert!((s.re - expect).abs() < 1e-12, "l = {l}");
                assert!(s.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        let n = Direction::from_angles(2.1_f64, 4.4);
        let ys = spherical_harmonics_upto(8, &n);
        for l in 0..=8usize {
            for m in 1..=l as i64 {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let d = ys[harmonic_index(l, -m)] - ys[harmonic_index(l, m)].conj() * sign;
                assert!(d.norm() < 1e-15);
            }
        }
    }
}
