use serde::{Deserialize, Serialize};

use crate::specfun::log_factorial;
use crate::spin::SpinQuantumNumber;
use crate::{Error, Real, Result};

fn check_index(j: SpinQuantumNumber, l: usize) -> Result<()> {
    if l > j.twice() as usize {
        return Err(Error::CoefficientIndex {
            l,
            twice_j: j.twice(),
        });
    }
    Ok(())
}

/// `ln S_{jl} = (1/2) sum_{k=0}^{l} ln((2j+1-k)/(2j+1+k))`.
fn log_s<T: Real>(j: SpinQuantumNumber, l: usize) -> T {
    let n = T::from_usize_exact(j.dim());
    let half = T::lit(0.5);
    (1..=l)
        .map(|k| {
            let kf = T::from_usize_exact(k);
            // ln(1 - 2k/(n+k)) keeps full relative precision for small k/n.
            (-(kf + kf) / (n + kf)).ln_1p() * half
        })
        .sum()
}

/// `ln A_{jl} = 2 ln (2j)! - ln (2j-l)! - ln (2j+l+1)!`.
fn log_a<T: Real>(j: SpinQuantumNumber, l: usize) -> T {
    let tj = j.twice() as usize;
    log_factorial::<T>(tj) * T::lit(2.0)
        - log_factorial::<T>(tj - l)
        - log_factorial::<T>(tj + l + 1)
}

/// Eigenvalue `S_{jl}` of the Weyl → Q kernel on degree-`l` harmonics.
pub fn s_coefficient<T: Real>(j: SpinQuantumNumber, l: usize) -> Result<T> {
    check_index(j, l)?;
    Ok(log_s::<T>(j, l).exp())
}

/// Legendre weight `A_{jl}` of the singlet Q function.
pub fn a_coefficient<T: Real>(j: SpinQuantumNumber, l: usize) -> Result<T> {
    check_index(j, l)?;
    Ok(log_a::<T>(j, l).exp())
}

/// `S_{jl}` and `A_{jl}` for `l = 0..=2j`, held as logarithms. Every value is
/// positive so no signs are stored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelCoefficients<T> {
    j: SpinQuantumNumber,
    log_s: Vec<T>,
    log_a: Vec<T>,
}

impl<T: Real> KernelCoefficients<T> {
    pub fn new(j: SpinQuantumNumber) -> Self {
        let lmax = j.twice() as usize;
        Self {
            j,
            log_s: (0..=lmax).map(|l| log_s(j, l)).collect(),
            log_a: (0..=lmax).map(|l| log_a(j, l)).collect(),
        }
    }

    pub fn j(&self) -> SpinQuantumNumber {
        self.j
    }

    pub fn lmax(&self) -> usize {
        self.log_s.len() - 1
    }

    pub fn log_s(&self, l: usize) -> T {
        self.log_s[l]
    }

    pub fn s(&self, l: usize) -> T {
        self.log_s[l].exp()
    }

    pub fn s_inv(&self, l: usize) -> T {
        (-self.log_s[l]).exp()
    }

    pub fn a(&self, l: usize) -> T {
        self.log_a[l].exp()
    }

    /// `S_{jl}^{-2} A_{jl}`, formed in log space.
    pub fn weyl_weight(&self, l: usize) -> T {
        (self.log_a[l] - self.log_s[l] * T::lit(2.0)).exp()
    }
}
