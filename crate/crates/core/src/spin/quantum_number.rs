use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Real};

/// Spin quantum number `j`, stored exactly as the integer `2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpinQuantumNumber {
    twice_j: u32,
}

impl SpinQuantumNumber {
    pub const ZERO: Self = Self { twice_j: 0 };
    pub const HALF: Self = Self { twice_j: 1 };

    pub const fn from_twice(twice_j: u32) -> Self {
        Self { twice_j }
    }

    /// Integer spin `j`.
    pub const fn integer(j: u32) -> Self {
        Self { twice_j: 2 * j }
    }

    pub const fn twice(self) -> u32 {
        self.twice_j
    }

    /// Hilbert-space dimension `2j + 1`.
    pub const fn dim(self) -> usize {
        self.twice_j as usize + 1
    }

    pub const fn is_half_integer(self) -> bool {
        self.twice_j % 2 == 1
    }

    /// `j` as a float.
    pub fn value<T: Real>(self) -> T {
        T::from_u32(self.twice_j).unwrap() * T::lit(0.5)
    }

    /// `j (j + 1)`.
    pub fn casimir<T: Real>(self) -> T {
        let j = self.value::<T>();
        j * (j + T::one())
    }

    /// Iterator over `2m` for `m = j, j-1, ..., -j` (the basis order used
    /// everywhere in this crate).
    pub fn twice_m_values(self) -> impl Iterator<Item = i64> + Clone {
        let tj = self.twice_j as i64;
        (0..=tj).map(move |i| tj - 2 * i)
    }

    /// Every spin from 0 up to and including `self`, in half-integer steps.
    pub fn ladder_to(self) -> impl Iterator<Item = SpinQuantumNumber> {
        (0..=self.twice_j).map(SpinQuantumNumber::from_twice)
    }

    /// `(-1)^{2j}`.
    pub fn parity_sign<T: Real>(self) -> T {
        if self.is_half_integer() {
            -T::one()
        } else {
            T::one()
        }
    }

    /// Name usable in file names: `5`, `19_2`.
    pub fn file_tag(self) -> String {
        if self.is_half_integer() {
            format!("{}_2", self.twice_j)
        } else {
            format!("{}", self.twice_j / 2)
        }
    }
}

impl fmt::Display for SpinQuantumNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_half_integer() {
            write!(f, "{}/2", self.twice_j)
        } else {
            write!(f, "{}", self.twice_j / 2)
        }
    }
}

/// Parses `"5"`, `"19/2"` or `"9.5"` exactly. Decimal input is accepted only
/// when the fractional part is `.0` or `.5`.
impl FromStr for SpinQuantumNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || Error::ParseSpin(s.to_string());
        let t = s.trim();
        if let Some((num, den)) = t.split_once('/') {
            let num: u32 = num.trim().parse().map_err(|_| err())?;
            return match den.trim() {
                "1" => num.checked_mul(2).map(Self::from_twice).ok_or_else(err),
                "2" => Ok(Self::from_twice(num)),
                _ => Err(err()),
            };
        }
        if let Some((int, frac)) = t.split_once('.') {
            let int: u32 = int.parse().map_err(|_| err())?;
            let frac = frac.trim_end_matches('0');
            let half = match frac {
                "" => 0,
                "5" => 1,
                _ => return Err(err()),
            };
            return int
                .checked_mul(2)
                .and_then(|v| v.checked_add(half))
                .map(Self::from_twice)
                .ok_or_else(err);
        }
        let int: u32 = t.parse().map_err(|_| err())?;
        int.checked_mul(2).map(Self::from_twice).ok_or_else(err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("19/2".parse::<SpinQuantumNumber>().unwrap().twice(), 19);
        assert_eq!("5".parse::<SpinQuantumNumber>().unwrap().twice(), 10);
        assert_eq!("4/2".parse::<SpinQuantumNumber>().unwrap().twice(), 4);
        assert_eq!("9.5".parse::<SpinQuantumNumber>().unwrap().twice(), 19);
        assert_eq!("3.0".parse::<SpinQuantumNumber>().unwrap().twice(), 6);
        assert_eq!(
            "0".parse::<SpinQuantumNumber>().unwrap(),
            SpinQuantumNumber::ZERO
        );
        for bad in ["", "1/3", "-1", "2.25", "x", "1/2/2"] {
            assert!(bad.parse::<SpinQuantumNumber>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for tj in 0..50 {
            let j = SpinQuantumNumber::from_twice(tj);
            assert_eq!(j.to_string().parse::<SpinQuantumNumber>().unwrap(), j);
        }
    }

    #[test]
    fn basis_order() {
        let m: Vec<_> = SpinQuantumNumber::from_twice(3).twice_m_values().collect();
        assert_eq!(m, vec![3, 1, -1, -3]);
        assert_eq!(SpinQuantumNumber::from_twice(3).dim(), 4);
    }
}
