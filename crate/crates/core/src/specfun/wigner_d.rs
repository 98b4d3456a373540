use crate::specfun::log_factorial;
use crate::spin::SpinQuantumNumber;
use crate::Real;

/// Small-d matrix `d^j_{m'm}(theta) = <j m'| exp(-i theta J_y) |j m>`.
///
/// Rows and columns run over `m = j, j-1, ..., -j`.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerDMatrix<T> {
    j: SpinQuantumNumber,
    theta: T,
    entries: Vec<T>,
}

impl<T: Real> WignerDMatrix<T> {
    pub fn j(&self) -> SpinQuantumNumber {
        self.j
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn dim(&self) -> usize {
        self.j.dim()
    }

    /// Entry by basis position (row `m' = j - row`, column `m = j - col`).
    pub fn at(&self, row: usize, col: usize) -> T {
        self.entries[row * self.dim() + col]
    }

    /// Entry by `(2m', 2m)`.
    pub fn get(&self, twice_mp: i64, twice_m: i64) -> T {
        let tj = self.j.twice() as i64;
        let row = ((tj - twice_mp) / 2) as usize;
        let col = ((tj - twice_m) / 2) as usize;
        self.at(row, col)
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    /// `max |(d^T d - 1)_{ab}|`.
    pub fn orthogonality_residual(&self) -> T {
        let n = self.dim();
        let mut worst = T::zero();
        for a in 0..n {
            for b in 0..n {
                let s: T = (0..n).map(|k| self.at(k, a) * self.at(k, b)).sum();
                let e = if a == b { T::one() } else { T::zero() };
                worst = worst.max((s - e).abs());
            }
        }
        worst
    }

    /// Matrix product `self * other` (same `j`).
    pub fn compose(&self, other: &Self) -> Vec<T> {
        let n = self.dim();
        let mut out = vec![T::zero(); n * n];
        for a in 0..n {
            for k in 0..n {
                let v = self.at(a, k);
                for b in 0..n {
                    out[a * n + b] += v * other.at(k, b);
                }
            }
        }
        out
    }
}

/// Single element `d^j_{m'm}(theta)`, arguments given as `2m'`, `2m`.
///
/// Standard factorial sum with every term's magnitude assembled in log
/// space and its sign tracked separately. Alternating terms cancel for
/// large `j` at generic angles; prefer [`wigner_d`] for full matrices.
pub fn wigner_d_element<T: Real>(j: SpinQuantumNumber, twice_mp: i64, twice_m: i64, theta: T) -> T {
    let tj = j.twice() as i64;
    debug_assert!(twice_mp.abs() <= tj && twice_m.abs() <= tj);
    debug_assert!((tj - twice_mp) % 2 == 0 && (tj - twice_m) % 2 == 0);
    let jpm = ((tj + twice_m) / 2) as usize;
    let jmm = ((tj - twice_m) / 2) as usize;
    let jpmp = ((tj + twice_mp) / 2) as usize;
    let jmmp = ((tj - twice_mp) / 2) as usize;
    let mp_minus_m = (twice_mp - twice_m) / 2;
    if theta == T::zero() {
        return if twice_mp == twice_m {
            T::one()
        } else {
            T::zero()
        };
    }

    let half = theta * T::lit(0.5);
    let (s, c) = half.sin_cos();
    let (ln_c, ln_s) = (c.abs().ln(), s.abs().ln());

    let ln_norm = T::lit(0.5)
        * (log_factorial::<T>(jpmp)
            + log_factorial::<T>(jmmp)
            + log_factorial::<T>(jpm)
            + log_factorial::<T>(jmm));

    let k_min = 0.max(-mp_minus_m) as usize;
    let k_max = jpm.min(jmmp);
    let mut sum = T::zero();
    for k in k_min..=k_max {
        let cos_pow = (jpm + jmmp) - 2 * k;
        let sin_pow = (2 * k as i64 + mp_minus_m) as usize;
        if (cos_pow > 0 && c == T::zero()) || (sin_pow > 0 && s == T::zero()) {
            continue;
        }
        let mut ln_term = ln_norm
            - log_factorial::<T>(jpm - k)
            - log_factorial::<T>(k)
            - log_factorial::<T>(jmmp - k)
            - log_factorial::<T>((k as i64 + mp_minus_m) as usize);
        if cos_pow > 0 {
            ln_term += T::from_usize_exact(cos_pow) * ln_c;
        }
        if sin_pow > 0 {
            ln_term += T::from_usize_exact(sin_pow) * ln_s;
        }
        let mut sign_odd = (k as i64 + mp_minus_m) % 2 != 0;
        if c < T::zero() && cos_pow % 2 == 1 {
            sign_odd = !sign_odd;
        }
        if s < T::zero() && sin_pow % 2 == 1 {
            sign_odd = !sign_odd;
        }
        let mag = ln_term.exp();
        sum += if sign_odd { -mag } else { mag };
    }
    sum
}

/// Full small-d matrix at angle `theta`.
///
/// Built up from `d^0 = 1` one half-unit of spin at a time by coupling with
/// spin 1/2. Each step is a convex-weighted combination of bounded entries,
/// so unlike the factorial sum it keeps orthogonality to rounding level at
/// large `j`.
pub fn wigner_d<T: Real>(j: SpinQuantumNumber, theta: T) -> WignerDMatrix<T> {
    if theta == T::zero() {
        let n = j.dim();
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { T::one() } else { T::zero() })
            .collect();
        return WignerDMatrix { j, theta, entries };
    }
    let (s, c) = (theta * T::lit(0.5)).sin_cos();
    // d^{1/2}_{ab} with a, b = +1/2 (index 0), -1/2 (index 1).
    let half = [[c, -s], [s, c]];
    let mut prev = vec![T::one()];
    for tj in 1..=j.twice() as usize {
        // coupling j1 = (tj-1)/2 with 1/2 up to J = tj/2
        let n_prev = tj;
        let n = tj + 1;
        let two_j = T::from_usize_exact(tj);
        // weight of (j1, m -+ 1/2) in |J m>, row r has 2m = tj - 2r
        let cg = |r: usize, up: bool| -> T {
            let twice_m = tj as i64 - 2 * r as i64;
            let num = if up {
                tj as i64 + twice_m
            } else {
                tj as i64 - twice_m
            };
            (T::from_i64(num).unwrap() / (two_j * T::lit(2.0))).sqrt()
        };
        let mut next = vec![T::zero(); n * n];
        for r in 0..n {
            for col in 0..n {
                let mut acc = T::zero();
                // a = +1/2 puts the j1 part at row r; a = -1/2 at row r - 1.
                for (ia, up_r) in [(0usize, true), (1, false)] {
                    let pr = if up_r { r } else { r.wrapping_sub(1) };
                    if pr >= n_prev {
                        continue;
                    }
                    let wr = cg(r, up_r);
                    for (ib, up_c) in [(0usize, true), (1, false)] {
                        let pc = if up_c { col } else { col.wrapping_sub(1) };
                        if pc >= n_prev {
                            continue;
                        }
                        acc += wr * cg(col, up_c) * prev[pr * n_prev + pc] * half[ia][ib];
                    }
                }
                next[r * n + col] = acc;
            }
        }
        prev = next;
    }
    WignerDMatrix {
        j,
        theta,
        entries: prev,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_at_zero() {
        for tj in 0..12 {
            let d = wigner_d(SpinQuantumNumber::from_twice(tj), 0.0_f64);
            for a in 0..d.dim() {
                for b in 0..d.dim() {
                    assert_eq!(d.at(a, b), if a == b { 1.0 } else { 0.0 });
                }
            }
        }
    }

    #[test]
    fn spin_half_closed_form() {
        let t = 0.9_f64;
        let d = wigner_d(SpinQuantumNumber::HALF, t);
        let (c, s) = ((t / 2.0).cos(), (t / 2.0).sin());
        assert!((d.get(1, 1) - c).abs() < 1e-15);
        assert!((d.get(1, -1) + s).abs() < 1e-15);
        assert!((d.get(-1, 1) - s).abs() < 1e-15);
        assert!((d.get(-1, -1) - c).abs() < 1e-15);
    }

    #[test]
    fn top_corner_and_q_function_law() {
        let j = SpinQuantumNumber::from_twice(3);
        let t = std::f64::consts::FRAC_PI_3;
        let d = wigner_d_element(j, 3, 3, t);
        assert!((d - (t / 2.0).cos().powi(3)).abs() < 1e-15);
        let q = ((1.0 + t.cos()) / 2.0).powi(3);
        assert!((d * d - q).abs() < 1e-15);
    }

    #[test]
    fn orthogonal_and_composes() {
        for tj in [1, 2, 5, 10, 20] {
            let j = SpinQuantumNumber::from_twice(tj);
            let (a, b) = (0.4_f64, 1.1_f64);
            let da = wigner_d(j, a);
            let db = wigner_d(j, b);
            assert!(da.orthogonality_residual() < 1e-12);
            let prod = da.compose(&db);
            let dab = wigner_d(j, a + b);
            for (p, q) in prod.iter().zip(dab.entries()) {
                assert!((p - q).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn recursion_matches_factorial_sum() {
        for tj in [1u32, 2, 3, 7, 12] {
            let j = SpinQuantumNumber::from_twice(tj);
            let t = 0.83_f64;
            let d = wigner_d(j, t);
            for (r, mp) in j.twice_m_values().enumerate() {
                for (c, m) in j.twice_m_values().enumerate() {
                    assert!((d.at(r, c) - wigner_d_element(j, mp, m, t)).abs() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn orthogonal_at_large_spin() {
        for tj in [40, 80] {
            for t in [0.3_f64, 1.2465569235162772, 2.9] {
                let d = wigner_d(SpinQuantumNumber::from_twice(tj), t);
                assert!(d.orthogonality_residual() < 1e-12, "{tj} {t}");
            }
        }
    }

    #[test]
    fn half_turn_is_antidiagonal() {
        let j = SpinQuantumNumber::from_twice(4);
        let d = wigner_d(j, std::f64::consts::PI);
        for (i, mp) in j.twice_m_values().enumerate() {
            for (k, m) in j.twice_m_values().enumerate() {
                let v = d.at(i, k);
                if mp == -m {
                    // (-1)^{j - m}
                    let sign = if ((4 - m) / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    assert!((v - sign).abs() < 1e-14, "{mp},{m}: {v}");
                } else {
                    assert!(v.abs() < 1e-14);
                }
            }
        }
    }
}
