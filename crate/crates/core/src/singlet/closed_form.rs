use crate::specfun::{bessel_j1, legendre_all, legendre_pair};
use crate::spin::{Direction, SpinQuantumNumber};
use crate::transforms::KernelCoefficients;
use crate::{Error, Real, Result};

/// Below this distance from `x = 1` the Christoffel–Darboux quotient is
/// replaced by the direct sum.
pub const CD_FALLBACK_GAP: f64 = 1e-6;

fn check_unit<T: Real>(x: T) -> Result<T> {
    if x.is_nan() || x.abs() > T::one() + T::domain_slack() {
        return Err(Error::Domain {
            value: x.to_f64().unwrap_or(f64::NAN),
            domain: "[-1, 1]",
        });
    }
    Ok(x.max(-T::one()).min(T::one()))
}

fn inv_sixteen_pi_sq<T: Real>() -> T {
    T::one() / (T::lit(16.0) * T::PI() * T::PI())
}

/// Real Legendre series `sum_l b_l P_l(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreSeries<T> {
    coefficients: Vec<T>,
}

impl<T: Real> LegendreSeries<T> {
    pub fn new(coefficients: Vec<T>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn evaluate(&self, x: T) -> Result<T> {
        let p = legendre_all(x, self.degree())?;
        Ok(self
            .coefficients
            .iter()
            .zip(p.values())
            .map(|(&b, &p)| b * p)
            .sum())
    }

    /// Singlet Q function in the variable `-n1.n2`:
    /// `b_l = (2l+1) A_jl / (2j+1)`.
    pub fn singlet_q(j: SpinQuantumNumber) -> Self {
        let k = KernelCoefficients::<T>::new(j);
        let n = T::from_usize_exact(j.dim());
        Self::new(
            (0..=k.lmax())
                .map(|l| T::from_usize_exact(2 * l + 1) * k.a(l) / n)
                .collect(),
        )
    }

    /// Singlet Wigner function in the variable `-n1.n2`:
    /// `b_l = (2l+1) / (16 pi^2)`.
    pub fn singlet_wigner(j: SpinQuantumNumber) -> Self {
        let c = inv_sixteen_pi_sq::<T>();
        Self::new(
            (0..j.dim())
                .map(|l| T::from_usize_exact(2 * l + 1) * c)
                .collect(),
        )
    }
}

/// Singlet Q function `[(1 - x)/2]^{2j} / (2j+1)` with `x = n1.n2`.
pub fn q_closed_form<T: Real>(j: SpinQuantumNumber, x: T) -> Result<T> {
    let x = check_unit(x)?;
    let n = T::from_usize_exact(j.dim());
    if j.twice() == 0 {
        return Ok(T::one() / n);
    }
    let base = (T::one() - x) * T::lit(0.5);
    if base == T::zero() {
        return Ok(T::zero());
    }
    Ok((T::from_u32(j.twice()).unwrap() * base.ln()).exp() / n)
}

/// `(2l+1) P_l` summed for `l = 0..=2j`, by direct summation.
pub(crate) fn weighted_legendre_sum<T: Real>(twice_j: u32, x: T) -> T {
    let (mut prev, mut cur) = (T::one(), x);
    let mut sum = T::one();
    for l in 1..=twice_j as usize {
        let lf = T::from_usize_exact(l);
        sum += (lf + lf + T::one()) * cur;
        let next = ((lf + lf + T::one()) * x * cur - lf * prev) / (lf + T::one());
        prev = cur;
        cur = next;
    }
    sum
}

/// Singlet Wigner function `(1/16pi^2) sum_{l<=2j} (2l+1) P_l(x)` with
/// `x = -n1.n2`, by direct summation.
pub fn wigner_exact_sum<T: Real>(j: SpinQuantumNumber, x: T) -> Result<T> {
    let x = check_unit(x)?;
    Ok(weighted_legendre_sum(j.twice(), x) * inv_sixteen_pi_sq::<T>())
}

/// Same function through the Christoffel–Darboux closed form
/// `(2j+1) [P_2j(x) - P_2j+1(x)] / (1 - x)`.
pub fn wigner_cd<T: Real>(j: SpinQuantumNumber, x: T) -> Result<T> {
    let x = check_unit(x)?;
    let gap = T::one() - x;
    if gap < T::lit(CD_FALLBACK_GAP) {
        return wigner_exact_sum(j, x);
    }
    let (p_n, p_n1) = legendre_pair(j.twice() as usize, x)?;
    let n = T::from_usize_exact(j.dim());
    Ok(n * (p_n - p_n1) / gap * inv_sixteen_pi_sq::<T>())
}

/// Wigner function on `S^2 x S^2`.
pub fn wigner_two_sphere<T: Real>(j: SpinQuantumNumber, n1: &Direction<T>, n2: &Direction<T>) -> T {
    wigner_exact_sum(j, -n1.dot(n2)).expect("dot product of unit vectors lies in [-1, 1]")
}

/// Bessel form
/// `(2j+1)/(16pi^2) (1 - cos g)^{-1} (g^3 / sin g)^{1/2} J1((2j+1) g)`,
/// with `cos g = -n1.n2`. Undefined at `g = 0` (see
/// [`wigner_asymptotic_peak`]) and not meaningful near `g = pi`, where
/// `sin g` vanishes.
pub fn wigner_asymptotic<T: Real>(j: SpinQuantumNumber, gamma: T) -> Result<T> {
    if gamma.is_nan() || gamma <= T::zero() || gamma > T::PI() {
        return Err(Error::Domain {
            value: gamma.to_f64().unwrap_or(f64::NAN),
            domain: "(0, pi]",
        });
    }
    let n = T::from_usize_exact(j.dim());
    let s = gamma.sin();
    // 1 - cos g = 2 sin^2(g/2) avoids cancellation for small g.
    let half_sin = (gamma * T::lit(0.5)).sin();
    let one_minus_cos = T::lit(2.0) * half_sin * half_sin;
    let shape = (gamma * gamma * gamma / s).sqrt();
    Ok(n * inv_sixteen_pi_sq::<T>() / one_minus_cos * shape * bessel_j1(n * gamma))
}

/// `g -> 0` limit of [`wigner_asymptotic`], equal to `(2j+1)^2 / 16pi^2`.
pub fn wigner_asymptotic_peak<T: Real>(j: SpinQuantumNumber) -> T {
    let n = T::from_usize_exact(j.dim());
    n * n * inv_sixteen_pi_sq::<T>()
}

/// Bessel form as a function of `x = cos g`, using the peak limit at `x = 1`.
pub fn wigner_asymptotic_at<T: Real>(j: SpinQuantumNumber, x: T) -> Result<T> {
    let x = check_unit(x)?;
    if x == T::one() {
        return Ok(wigner_asymptotic_peak(j));
    }
    // g = 2 asin(sqrt((1 - x)/2)) keeps precision near x = 1.
    let gamma = T::lit(2.0) * ((T::one() - x) * T::lit(0.5)).sqrt().asin();
    wigner_asymptotic(j, gamma)
}

/// `8 pi^2 integral_{-1}^{1} W(x) dx`, with Gauss–Legendre exact for the
/// degree-`2j` integrand.
pub fn normalization<T: Real>(j: SpinQuantumNumber) -> T {
    let rule = crate::specfun::gauss_legendre::<T>(j.twice() as usize + 2);
    let eight_pi_sq = T::lit(8.0) * T::PI() * T::PI();
    eight_pi_sq * rule.integrate(|x| weighted_legendre_sum(j.twice(), x) * inv_sixteen_pi_sq::<T>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gauss_legendre;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn sj(tj: u32) -> SpinQuantumNumber {
        SpinQuantumNumber::from_twice(tj)
    }

    const C: f64 = 1.0 / (16.0 * PI * PI);

    #[test]
    fn q_values() {
        for tj in 0..20 {
            let q: f64 = q_closed_form(sj(tj), -1.0).unwrap();
            assert!((q - 1.0 / (tj + 1) as f64).abs() < 1e-15);
            if tj > 0 {
                assert_eq!(q_closed_form(sj(tj), 1.0_f64).unwrap(), 0.0);
            }
        }
        assert!((q_closed_form(sj(4), 0.0_f64).unwrap() - 0.0125).abs() < 1e-16);
        assert!(q_closed_form(sj(4), 1.5_f64).is_err());
    }

    #[test]
    fn q_legendre_resynthesis() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for tj in 0..=40 {
            let series = LegendreSeries::<f64>::singlet_q(sj(tj));
            for _ in 0..20 {
                let x: f64 = rng.gen_range(-1.0..1.0);
                let direct = q_closed_form(sj(tj), x).unwrap();
                assert!(
                    (series.evaluate(-x).unwrap() - direct).abs() < 1e-10,
                    "2j = {tj}"
                );
            }
        }
    }

    /// Gauss–Legendre projection of the closed-form Q onto P_l(-x).
    #[test]
    fn q_legendre_weights_by_quadrature() {
        let j = sj(3);
        let rule = gauss_legendre::<f64>(8);
        let k = KernelCoefficients::<f64>::new(j);
        for l in 0..=3 {
            let proj = rule.integrate(|u| {
                q_closed_form(j, -u).unwrap() * crate::specfun::legendre(l, u).unwrap()
            }) * (2 * l + 1) as f64
                / 2.0;
            let expect = (2 * l + 1) as f64 * k.a(l) / 4.0;
            assert!((proj - expect).abs() < 1e-10);
        }
    }

    #[test]
    fn exact_sum_values() {
        assert!((wigner_exact_sum(sj(0), 0.3_f64).unwrap() - C).abs() < 1e-18);
        assert!((wigner_exact_sum(sj(10), 1.0_f64).unwrap() - 121.0 * C).abs() < 1e-13);
        assert!((wigner_exact_sum(sj(19), -1.0_f64).unwrap() + 20.0 * C).abs() < 1e-14);
    }

    #[test]
    fn cd_values() {
        let x = 0.37_f64;
        assert!(
            (wigner_cd(SpinQuantumNumber::HALF, x).unwrap() - (1.0 + 3.0 * x) * C).abs() < 1e-17
        );
        assert!((wigner_cd(SpinQuantumNumber::HALF, 0.0_f64).unwrap() - C).abs() < 1e-18);
        for tj in 0..20 {
            let w: f64 = wigner_cd(sj(tj), -1.0).unwrap();
            let sign = if tj % 2 == 1 { -1.0 } else { 1.0 };
            assert!((w - sign * (tj + 1) as f64 * C).abs() < 1e-14);
        }
    }

    #[test]
    fn cd_matches_exact_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let j = sj(80);
        for _ in 0..1000 {
            let x: f64 = rng.gen_range(-1.0..1.0);
            let a = wigner_cd(j, x).unwrap();
            let b = wigner_exact_sum(j, x).unwrap();
            assert!((a - b).abs() < 1e-10, "x = {x}");
        }
        // fallback region
        let x = 1.0 - 1e-8;
        assert_eq!(wigner_cd(j, x).unwrap(), wigner_exact_sum(j, x).unwrap());
    }

    #[test]
    fn series_type_matches_sum() {
        let j = sj(9);
        let s = LegendreSeries::<f64>::singlet_wigner(j);
        assert_eq!(s.degree(), 9);
        assert!((s.evaluate(0.2).unwrap() - wigner_exact_sum(j, 0.2).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn asymptotic_small_angle_limit() {
        let j = sj(11);
        let peak: f64 = wigner_asymptotic_peak(j);
        assert!((peak - 144.0 * C).abs() < 1e-15);
        let near = wigner_asymptotic(j, 1e-6_f64).unwrap();
        assert!((near / peak - 1.0).abs() < 1e-9);
        assert!(wigner_asymptotic(j, 0.0_f64).is_err());
        assert!(wigner_asymptotic(j, 3.5_f64).is_err());
        assert_eq!(wigner_asymptotic_at(j, 1.0_f64).unwrap(), peak);
    }

    #[test]
    fn asymptotic_zero_at_bessel_root() {
        let j = sj(80);
        let g = 3.8317059702075125 / 81.0;
        let w: f64 = wigner_asymptotic(j, g).unwrap();
        assert!(w.abs() < 1e-12 * wigner_asymptotic_peak::<f64>(j));
    }

    #[test]
    fn two_sphere_form_depends_on_angle_only() {
        let j = sj(5);
        let a = Direction::from_angles(0.3_f64, 0.1);
        let b = Direction::from_angles(1.9_f64, 2.2);
        let w = wigner_two_sphere(j, &a, &b);
        assert!((w - wigner_exact_sum(j, -a.dot(&b)).unwrap()).abs() < 1e-18);
        assert!((wigner_two_sphere(j, &a, &a.antipode()) - 36.0 * C).abs() < 1e-14);
    }

    #[test]
    fn normalized() {
        for tj in 0..=80 {
            let v: f64 = normalization(sj(tj));
            assert!((v - 1.0).abs() < 1e-9, "2j = {tj}: {v}");
        }
    }
}
