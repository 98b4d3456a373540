use std::ops::{Add, Mul, Sub};

use num_complex::Complex;

use crate::spin::{SpinQuantumNumber, StateVector};
use crate::{Error, Real, Result};

/// What Hilbert space an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinContent {
    /// One spin-j particle, dimension `2j + 1`.
    One(SpinQuantumNumber),
    /// Two spin-j particles, dimension `(2j + 1)^2`, particle 1 in the left
    /// tensor slot.
    Two(SpinQuantumNumber),
}

impl SpinContent {
    pub fn dim(self) -> usize {
        match self {
            SpinContent::One(j) => j.dim(),
            SpinContent::Two(j) => j.dim() * j.dim(),
        }
    }

    pub fn spin(self) -> SpinQuantumNumber {
        match self {
            SpinContent::One(j) | SpinContent::Two(j) => j,
        }
    }

    pub fn num_spins(self) -> u32 {
        match self {
            SpinContent::One(_) => 1,
            SpinContent::Two(_) => 2,
        }
    }
}

/// Dense complex square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator<T> {
    content: SpinContent,
    data: Vec<Complex<T>>,
}

impl<T: Real> DenseOperator<T> {
    pub fn zeros(content: SpinContent) -> Self {
        let n = content.dim();
        Self {
            content,
            data: vec![Complex::new(T::zero(), T::zero()); n * n],
        }
    }

    pub fn identity(content: SpinContent) -> Self {
        let mut out = Self::zeros(content);
        let n = content.dim();
        for i in 0..n {
            out.data[i * n + i] = Complex::new(T::one(), T::zero());
        }
        out
    }

    /// Builds from row-major entries.
    pub fn from_entries(content: SpinContent, data: Vec<Complex<T>>) -> Result<Self> {
        let n = content.dim();
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        Ok(Self { content, data })
    }

    pub fn from_fn(content: SpinContent, f: impl Fn(usize, usize) -> Complex<T>) -> Self {
        let n = content.dim();
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { content, data }
    }

    pub fn content(&self) -> SpinContent {
        self.content
    }

    pub fn dim(&self) -> usize {
        self.content.dim()
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.dim() + col]
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.dim();
        let mut out = Self::zeros(self.content);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex::new(T::zero(), T::zero()) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            content: self.content,
            data: self.data.iter().map(|&v| v * s).collect(),
        }
    }

    pub fn scale_real(&self, s: T) -> Self {
        self.scale(Complex::new(s, T::zero()))
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim();
        Self::from_fn(self.content, |i, j| self.data[j * n + i].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        let n = self.dim();
        (0..n).map(|i| self.data[i * n + i]).sum()
    }

    /// `Tr(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<Complex<T>> {
        self.check_same(other)?;
        let n = self.dim();
        let mut s = Complex::new(T::zero(), T::zero());
        for i in 0..n {
            for k in 0..n {
                s += self.data[i * n + k] * other.data[k * n + i];
            }
        }
        Ok(s)
    }

    /// `A B - B A`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(self.matmul(other)? - other.matmul(self)?)
    }

    /// `max |A - A^dagger|` entrywise.
    pub fn hermiticity_residual(&self) -> T {
        let n = self.dim();
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((self.data[i * n + j] - self.data[j * n + i].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermiticity_residual() <= tol
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|v| v.norm()).fold(T::zero(), T::max)
    }

    pub fn apply(&self, v: &StateVector<T>) -> Result<StateVector<T>> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        let n = self.dim();
        let amps = v.amplitudes();
        let out = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| self.data[i * n + k] * amps[k])
                    .sum::<Complex<T>>()
            })
            .collect();
        Ok(StateVector::from_amplitudes_unchecked(out))
    }

    /// `<v| A |v>`.
    pub fn quadratic_form(&self, v: &StateVector<T>) -> Result<Complex<T>> {
        let av = self.apply(v)?;
        Ok(v.inner(&av))
    }

    /// Tensor product `self ⊗ other` of two one-spin operators with the same
    /// `j`, particle 1 on the left.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let (SpinContent::One(j1), SpinContent::One(j2)) = (self.content, other.content) else {
            return Err(Error::DimensionMismatch {
                expected: self.content.spin().dim(),
                found: self.dim(),
            });
        };
        if j1 != j2 {
            return Err(Error::DimensionMismatch {
                expected: j1.dim(),
                found: j2.dim(),
            });
        }
        let d = j1.dim();
        Ok(Self::from_fn(SpinContent::Two(j1), |r, c| {
            let (i, k) = (r / d, r % d);
            let (j, l) = (c / d, c % d);
            self.data[i * d + j] * other.data[k * d + l]
        }))
    }

    /// `self ⊗ 1` for a one-spin operator.
    pub fn on_first(&self) -> Result<Self> {
        self.kron(&Self::identity(self.content))
    }

    /// `1 ⊗ self` for a one-spin operator.
    pub fn on_second(&self) -> Result<Self> {
        Self::identity(self.content).kron(self)
    }
}

impl<T: Real> Add for DenseOperator<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Self {
            content: self.content,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<T: Real> Sub for DenseOperator<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        Self {
            content: self.content,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}

impl<T: Real> Mul for &DenseOperator<T> {
    type Output = DenseOperator<T>;
    fn mul(self, rhs: Self) -> DenseOperator<T> {
        self.matmul(rhs).expect("dimension mismatch")
    }
}
