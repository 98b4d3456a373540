use crate::roots::bisect;
use crate::Real;

/// Below this argument `J1` is summed from its power series; above it the
/// Hankel asymptotic expansion is used.
pub const BESSEL_J1_SERIES_LIMIT: f64 = 12.0;

fn j1_series<T: Real>(z: T) -> T {
    let half = z * T::lit(0.5);
    let q = half * half;
    let mut term = half;
    let mut sum = term;
    let mut k = T::zero();
    for _ in 0..200 {
        k += T::one();
        term = -term * q / (k * (k + T::one()));
        sum += term;
        if term.abs() <= T::epsilon() * T::lit(0.25) * sum.abs().max(T::min_positive_value()) {
            break;
        }
    }
    sum
}

fn j1_asymptotic<T: Real>(z: T) -> T {
    // a_k = prod_{i=1..k} (4 - (2i-1)^2) / (k! 8^k); P collects even k,
    // Q odd k, both with alternating signs. The series is divergent and is
    // cut at its smallest term.
    let mu = T::lit(4.0);
    let eight_z = T::lit(8.0) * z;
    let mut p = T::one();
    let mut q = T::zero();
    let mut term = T::one();
    let mut last = T::infinity();
    for k in 1..200 {
        let kf = T::from_usize_exact(k);
        let odd = T::from_usize_exact(2 * k - 1);
        term = term * (mu - odd * odd) / (kf * eight_z);
        if term.abs() >= last {
            break;
        }
        last = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < T::epsilon() * T::lit(1e-2) {
            break;
        }
    }
    let chi = z - T::lit(0.75) * T::PI();
    let (s, c) = chi.sin_cos();
    (T::lit(2.0) / (T::PI() * z)).sqrt() * (p * c - q * s)
}

/// Bessel function of the first kind of order one, for `z >= 0`.
///
/// Odd symmetry is used for negative arguments.
pub fn bessel_j1<T: Real>(z: T) -> T {
    if z < T::zero() {
        return -bessel_j1(-z);
    }
    if z == T::zero() {
        return T::zero();
    }
    if z < T::lit(BESSEL_J1_SERIES_LIMIT) {
        j1_series(z)
    } else {
        j1_asymptotic(z)
    }
}

/// The `k`-th positive zero of `J1` (`k >= 1`), refined by bisection from
/// McMahon's estimate.
pub fn bessel_j1_zero<T: Real>(k: usize) -> T {
    assert!(k >= 1, "zeros are numbered from 1");
    let beta = (T::from_usize_exact(k) + T::lit(0.25)) * T::PI();
    let guess = beta - T::lit(3.0 / 8.0) / beta;
    let width = T::lit(0.5);
    bisect(
        bessel_j1,
        guess - width,
        guess + width,
        T::epsilon() * guess * T::lit(4.0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// J1(z) = (1/pi) * integral_0^pi cos(t - z sin t) dt. The integrand is
    /// smooth and periodic, so the trapezoid rule converges geometrically.
    fn j1_quadrature(z: f64) -> f64 {
        let n = 4096;
        let h = PI / n as f64;
        let mut s = 0.5 * ((0.0f64).cos() + (PI - z * PI.sin()).cos());
        for i in 1..n {
            let t = i as f64 * h;
            s += (t - z * t.sin()).cos();
        }
        s * h / PI
    }

    #[test]
    fn origin() {
        assert_eq!(bessel_j1(0.0_f64), 0.0);
    }

    #[test]
    fn first_zero_reported_value() {
        assert!(bessel_j1(3.8317_f64).abs() < 1e-4);
        let z: f64 = bessel_j1_zero(1);
        assert!((z - 3.8317).abs() < 1e-4);
        assert!(bessel_j1(z).abs() < 1e-14);
    }

    #[test]
    fn against_integral_representation() {
        let mut z = 0.01;
        while z <= 1000.0 {
            let exact = j1_quadrature(z);
            let got = bessel_j1(z);
            assert!((got - exact).abs() < 1e-10, "z = {z}: {got} vs {exact}");
            z *= 1.07;
        }
    }

    #[test]
    fn branches_agree_at_switch() {
        for z in [11.0, 11.5, 12.0, 12.5, 13.0] {
            let a: f64 = j1_series(z);
            let b: f64 = j1_asymptotic(z);
            assert!((a - b).abs() < 1e-10, "z = {z}: {a} vs {b}");
        }
    }

    #[test]
    fn envelope_at_twenty() {
        // Local maximum of |J1| near z = 20 against sqrt(2 / (pi z)) there.
        let grid: Vec<f64> = (0..600).map(|i| 17.0 + i as f64 * 0.01).collect();
        let (z_peak, peak) = grid
            .iter()
            .map(|&z| (z, j1_quadrature(z).abs()))
            .fold((0.0, 0.0), |a, b| if b.1 > a.1 { b } else { a });
        let env = (2.0 / (PI * z_peak)).sqrt();
        assert!((peak / env - 1.0).abs() < 0.05);
        assert!((bessel_j1(z_peak).abs() - peak).abs() < 1e-10);
    }

    #[test]
    fn zeros_are_spaced_by_pi() {
        let zs: Vec<f64> = (1..=20).map(bessel_j1_zero).collect();
        for w in zs.windows(2) {
            assert!(((w[1] - w[0]) - PI).abs() < 0.05);
        }
        assert!((zs[1] - 7.015586669815619).abs() < 1e-12);
    }

    #[test]
    fn odd_symmetry_and_f32() {
        assert_eq!(bessel_j1(-2.0_f64), -bessel_j1(2.0_f64));
        assert!((bessel_j1(2.0_f32) as f64 - bessel_j1(2.0_f64)).abs() < 1e-6);
    }
}
