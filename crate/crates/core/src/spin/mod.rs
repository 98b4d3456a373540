//! Dense spin algebra: angular-momentum matrices, coherent states and the
//! two-spin singlet.
//!
//! Basis order is `m = j, j-1, ..., -j` throughout. Two-spin objects put
//! particle 1 in the left tensor slot. This layer is brute force on purpose;
//! it is the oracle the spectral code is checked against.

mod direction;
mod operator;
mod quantum_number;
mod state;

pub use direction::Direction;
pub use operator::{DenseOperator, SpinContent};
pub use quantum_number::SpinQuantumNumber;
pub use state::StateVector;

use num_complex::Complex;

use crate::specfun::{wigner_d, wigner_d_element};
use crate::{Error, Real, Result};

/// Largest `2j` for which two-spin dense objects are built by the oracle
/// suites (matrix dimension 289).
pub const TWO_SPIN_ORACLE_MAX_TWICE_J: u32 = 16;

/// Cartesian components of the spin operator.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinOperators<T> {
    pub jx: DenseOperator<T>,
    pub jy: DenseOperator<T>,
    pub jz: DenseOperator<T>,
}

impl<T: Real> SpinOperators<T> {
    /// `J . a` for an arbitrary (not necessarily unit) vector `a`.
    pub fn along(&self, a: [T; 3]) -> DenseOperator<T> {
        self.jx.scale_real(a[0]) + self.jy.scale_real(a[1]) + self.jz.scale_real(a[2])
    }

    pub fn components(&self) -> [&DenseOperator<T>; 3] {
        [&self.jx, &self.jy, &self.jz]
    }
}

/// `J_x, J_y, J_z` in the `|j, m>` basis.
pub fn spin_operators<T: Real>(j: SpinQuantumNumber) -> SpinOperators<T> {
    let content = SpinContent::One(j);
    let tj = j.twice() as i64;
    let quarter = T::lit(0.25);
    // <m+1| J+ |m> = sqrt((j - m)(j + m + 1)), written with 2m.
    let raise =
        |tm: i64| -> T { (T::from_i64((tj - tm) * (tj + tm + 2)).unwrap() * quarter).sqrt() };
    let zero = Complex::new(T::zero(), T::zero());
    let half = T::lit(0.5);
    let jx = DenseOperator::from_fn(content, |r, c| {
        let (tm_r, tm_c) = (tj - 2 * r as i64, tj - 2 * c as i64);
        if tm_r == tm_c + 2 {
            Complex::new(half * raise(tm_c), T::zero())
        } else if tm_c == tm_r + 2 {
            Complex::new(half * raise(tm_r), T::zero())
        } else {
            zero
        }
    });
    let jy = DenseOperator::from_fn(content, |r, c| {
        let (tm_r, tm_c) = (tj - 2 * r as i64, tj - 2 * c as i64);
        // J_y = (J+ - J-) / 2i
        if tm_r == tm_c + 2 {
            Complex::new(T::zero(), -half * raise(tm_c))
        } else if tm_c == tm_r + 2 {
            Complex::new(T::zero(), half * raise(tm_r))
        } else {
            zero
        }
    });
    let jz = DenseOperator::from_fn(content, |r, c| {
        if r == c {
            Complex::new(T::from_i64(tj - 2 * r as i64).unwrap() * half, T::zero())
        } else {
            zero
        }
    });
    SpinOperators { jx, jy, jz }
}

/// Rotation `exp(-i phi J_z) exp(-i theta J_y) exp(i phi J_z)` taking `z`
/// to `n` along the geodesic (axis `z × n`). At the south pole the axis is
/// taken as `y`.
pub fn geodesic_rotation<T: Real>(j: SpinQuantumNumber, n: &Direction<T>) -> DenseOperator<T> {
    let theta = n.theta();
    let phi = n.phi();
    let ms: Vec<i64> = j.twice_m_values().collect();
    let half = T::lit(0.5);
    let dm = wigner_d(j, theta);
    DenseOperator::from_fn(SpinContent::One(j), |r, c| {
        let (mp, m) = (ms[r], ms[c]);
        let d = dm.at(r, c);
        let angle = -T::from_i64(mp - m).unwrap() * half * phi;
        Complex::from_polar(d, angle)
    })
}

/// Spin coherent state `|n>`: the `J.n = j` eigenstate obtained by rotating
/// `|j, j>` through `theta` about `z × n`. At `n = ±z` the basis state is
/// returned directly.
pub fn coherent_state<T: Real>(j: SpinQuantumNumber, n: &Direction<T>) -> StateVector<T> {
    let dim = j.dim();
    if n.sin_theta() == T::zero() {
        let index = if n.z() > T::zero() { 0 } else { dim - 1 };
        return StateVector::basis(dim, index);
    }
    let theta = n.theta();
    let phi = n.phi();
    let tj = j.twice() as i64;
    let half = T::lit(0.5);
    let amps = j
        .twice_m_values()
        .map(|tm| {
            // Single-term element d^j_{m j}: no cancellation.
            let d = wigner_d_element(j, tm, tj, theta);
            Complex::from_polar(d, -T::from_i64(tm - tj).unwrap() * half * phi)
        })
        .collect();
    StateVector::from_amplitudes_unchecked(amps)
}

/// `(-1)^{j - m}` for `2m = twice_m`.
fn singlet_sign<T: Real>(j: SpinQuantumNumber, twice_m: i64) -> T {
    if ((j.twice() as i64 - twice_m) / 2) % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// Two-spin singlet `sum_m (-1)^{j-m} |j,m>_u ⊗ |j,-m>_u / sqrt(2j+1)` built
/// in the eigenbasis of `J.u`. Different axes give the same state up to a
/// global phase.
pub fn singlet_state<T: Real>(j: SpinQuantumNumber, axis: &Direction<T>) -> StateVector<T> {
    let dim = j.dim();
    let rot = geodesic_rotation(j, axis);
    let norm = T::one() / T::from_usize_exact(dim).sqrt();
    let mut amps = vec![Complex::new(T::zero(), T::zero()); dim * dim];
    for (idx, tm) in j.twice_m_values().enumerate() {
        let partner = dim - 1 - idx;
        let coef = singlet_sign::<T>(j, tm) * norm;
        // column `idx` of the rotation is |j, m>_u
        for a in 0..dim {
            let ua = rot.at(a, idx);
            if ua == Complex::new(T::zero(), T::zero()) {
                continue;
            }
            for b in 0..dim {
                amps[a * dim + b] += ua * rot.at(b, partner) * coef;
            }
        }
    }
    StateVector::from_amplitudes_unchecked(amps)
}

/// Projector `|psi><psi|`. The content is inferred from the dimension.
pub fn density_matrix<T: Real>(
    psi: &StateVector<T>,
    content: SpinContent,
) -> Result<DenseOperator<T>> {
    if psi.dim() != content.dim() {
        return Err(Error::DimensionMismatch {
            expected: content.dim(),
            found: psi.dim(),
        });
    }
    let a = psi.amplitudes();
    Ok(DenseOperator::from_fn(content, |r, c| a[r] * a[c].conj()))
}

/// `Tr(rho F)`.
pub fn expectation<T: Real>(rho: &DenseOperator<T>, f: &DenseOperator<T>) -> Result<Complex<T>> {
    rho.trace_product(f)
}

/// `Tr(F) / dim`.
pub fn qm_average<T: Real>(f: &DenseOperator<T>) -> Complex<T> {
    f.trace() / Complex::new(T::from_usize_exact(f.dim()), T::zero())
}

/// Dense singlet projector for spin `j`.
pub fn singlet_density<T: Real>(j: SpinQuantumNumber) -> DenseOperator<T> {
    let psi = singlet_state(j, &Direction::z_axis());
    density_matrix(&psi, SpinContent::Two(j)).expect("singlet has two-spin dimension")
}

/// `(J_1 . a)(J_2 . b)` on the two-spin space.
pub fn correlation_operator<T: Real>(
    j: SpinQuantumNumber,
    a: [T; 3],
    b: [T; 3],
) -> DenseOperator<T> {
    let ops = spin_operators::<T>(j);
    ops.along(a)
        .kron(&ops.along(b))
        .expect("same spin on both slots")
}
