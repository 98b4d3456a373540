//! Exact rational values of `S_{jl}^2` and `A_{jl}`.
//!
//! Both are ratios of factorials, so the identity `A / S^2 = 1/(2j+1)` can
//! be confirmed with no rounding at all. This is an independent route to
//! the floating-point coefficients in [`super::KernelCoefficients`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::spin::SpinQuantumNumber;
use crate::{Error, Result};

fn factorial(n: usize) -> BigInt {
    (1..=n as u64).map(BigInt::from).product()
}

fn check(j: SpinQuantumNumber, l: usize) -> Result<()> {
    if l > j.twice() as usize {
        return Err(Error::CoefficientIndex {
            l,
            twice_j: j.twice(),
        });
    }
    Ok(())
}

/// `S_{jl}^2 = prod_{k=0}^{l} (2j+1-k)/(2j+1+k)`.
pub fn s_squared_exact(j: SpinQuantumNumber, l: usize) -> Result<BigRational> {
    check(j, l)?;
    let n = j.dim() as i64;
    Ok((0..=l as i64).fold(BigRational::one(), |acc, k| {
        acc * BigRational::new(BigInt::from(n - k), BigInt::from(n + k))
    }))
}

/// `A_{jl} = ((2j)!)^2 / ((2j-l)! (2j+l+1)!)`.
pub fn a_exact(j: SpinQuantumNumber, l: usize) -> Result<BigRational> {
    check(j, l)?;
    let tj = j.twice() as usize;
    let f = factorial(tj);
    Ok(BigRational::new(
        &f * &f,
        factorial(tj - l) * factorial(tj + l + 1),
    ))
}

/// `A_{jl} / S_{jl}^2` as an exact rational.
pub fn weyl_weight_exact(j: SpinQuantumNumber, l: usize) -> Result<BigRational> {
    Ok(a_exact(j, l)? / s_squared_exact(j, l)?)
}

/// Degrees `l <= 2j` at which `A / S^2 != 1/(2j+1)` exactly.
pub fn weyl_weight_exact_failures(j: SpinQuantumNumber) -> Result<Vec<usize>> {
    let target = BigRational::new(BigInt::one(), BigInt::from(j.dim()));
    let mut bad = Vec::new();
    for l in 0..=j.twice() as usize {
        if weyl_weight_exact(j, l)? != target {
            bad.push(l);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::KernelCoefficients;
    use num_traits::ToPrimitive;

    #[test]
    fn identity_is_exact() {
        for tj in 0..=80u32 {
            let j = SpinQuantumNumber::from_twice(tj);
            let target = BigRational::new(BigInt::one(), BigInt::from(tj + 1));
            for l in 0..=tj as usize {
                assert_eq!(weyl_weight_exact(j, l).unwrap(), target);
            }
            assert!(weyl_weight_exact_failures(j).unwrap().is_empty());
        }
    }

    #[test]
    fn floats_agree_with_rationals() {
        for tj in [1u32, 7, 20, 41, 80] {
            let j = SpinQuantumNumber::from_twice(tj);
            let k = KernelCoefficients::<f64>::new(j);
            for l in 0..=tj as usize {
                let s2 = s_squared_exact(j, l).unwrap().to_f64().unwrap();
                let a = a_exact(j, l).unwrap().to_f64().unwrap();
                assert!((k.s(l) * k.s(l) / s2 - 1.0).abs() < 1e-13);
                assert!((k.a(l) / a - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn spin_half() {
        let j = SpinQuantumNumber::HALF;
        assert_eq!(
            s_squared_exact(j, 1).unwrap(),
            BigRational::new(BigInt::one(), BigInt::from(3))
        );
        assert_eq!(
            a_exact(j, 1).unwrap(),
            BigRational::new(BigInt::one(), BigInt::from(6))
        );
        assert!(a_exact(j, 2).is_err());
    }
}
