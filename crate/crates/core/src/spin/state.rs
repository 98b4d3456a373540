use num_complex::Complex;

use crate::{Error, Real, Result};

/// Normalized pure state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    amps: Vec<Complex<T>>,
}

impl<T: Real> StateVector<T> {
    /// Accepts amplitudes of unit norm within `1e-12`.
    pub fn new(amps: Vec<Complex<T>>) -> Result<Self> {
        let v = Self { amps };
        let norm = v.norm();
        if (norm - T::one()).abs() > T::domain_slack() * T::lit(10.0) {
            return Err(Error::NotUnit {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(v)
    }

    /// Rescales to unit norm.
    pub fn normalized(amps: Vec<Complex<T>>) -> Result<Self> {
        let v = Self { amps };
        let norm = v.norm();
        if norm.is_nan() || norm <= T::zero() {
            return Err(Error::NotUnit { norm: 0.0 });
        }
        let inv = T::one() / norm;
        Ok(Self {
            amps: v.amps.into_iter().map(|a| a * inv).collect(),
        })
    }

    pub(crate) fn from_amplitudes_unchecked(amps: Vec<Complex<T>>) -> Self {
        Self { amps }
    }

    /// Basis vector `index` (0 is `m = j`).
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); dim];
        amps[index] = Complex::new(T::one(), T::zero());
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm(&self) -> T {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<T>().sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|self> ⊗ |other>`, `self` in the left slot.
    pub fn kron(&self, other: &Self) -> Self {
        let amps = self
            .amps
            .iter()
            .flat_map(|&a| other.amps.iter().map(move |&b| a * b))
            .collect();
        Self { amps }
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            amps: self.amps.iter().map(|&a| a * s).collect(),
        }
    }
}
