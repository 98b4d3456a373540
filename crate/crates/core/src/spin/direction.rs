use serde::{Deserialize, Serialize};

use crate::{Error, Real, Result};

/// A point on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction<T> {
    x: T,
    y: T,
    z: T,
}

impl<T: Real> Direction<T> {
    /// Checked constructor: `|n|` must be one within `1e-12`.
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        Self::with_tolerance(x, y, z, T::domain_slack())
    }

    /// Accepts `(x, y, z)` if `||n| - 1| <= tol` and renormalizes it.
    pub fn with_tolerance(x: T, y: T, z: T, tol: T) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || (norm - T::one()).abs() > tol {
            return Err(Error::NotUnit {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    /// Normalizes any nonzero vector.
    pub fn normalize(x: T, y: T, z: T) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if norm.is_nan() || norm <= T::zero() || !norm.is_finite() {
            return Err(Error::NotUnit {
                norm: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    /// Polar angle `theta` from +z and azimuth `phi`.
    pub fn from_angles(theta: T, phi: T) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self {
            x: st * cp,
            y: st * sp,
            z: ct,
        }
    }

    /// Builds a direction from `cos(theta)` and `phi` without losing
    /// precision near the poles.
    pub fn from_cos_theta(cos_theta: T, phi: T) -> Self {
        let ct = cos_theta.max(-T::one()).min(T::one());
        let st = ((T::one() - ct) * (T::one() + ct)).sqrt();
        let (sp, cp) = phi.sin_cos();
        Self {
            x: st * cp,
            y: st * sp,
            z: ct,
        }
    }

    pub fn z_axis() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
            z: T::one(),
        }
    }

    pub fn x_axis() -> Self {
        Self {
            x: T::one(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    pub fn y_axis() -> Self {
        Self {
            x: T::zero(),
            y: T::one(),
            z: T::zero(),
        }
    }

    pub fn x(&self) -> T {
        self.x
    }
    pub fn y(&self) -> T {
        self.y
    }
    pub fn z(&self) -> T {
        self.z
    }

    pub fn to_array(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    /// Polar angle in `[0, pi]`.
    pub fn theta(&self) -> T {
        self.sin_theta().atan2(self.z)
    }

    /// Azimuth in `[0, 2 pi)`; zero at the poles.
    pub fn phi(&self) -> T {
        if self.x == T::zero() && self.y == T::zero() {
            return T::zero();
        }
        let p = self.y.atan2(self.x);
        if p < T::zero() {
            p + T::TAU()
        } else {
            p
        }
    }

    pub fn sin_theta(&self) -> T {
        self.x.hypot(self.y)
    }

    pub fn dot(&self, other: &Self) -> T {
        (self.x * other.x + self.y * other.y + self.z * other.z)
            .max(-T::one())
            .min(T::one())
    }

    /// Angle between the two directions, computed without `acos` cancellation.
    pub fn angle_to(&self, other: &Self) -> T {
        let cx = self.y * other.z - self.z * other.y;
        let cy = self.z * other.x - self.x * other.z;
        let cz = self.x * other.y - self.y * other.x;
        let cross = (cx * cx + cy * cy + cz * cz).sqrt();
        let dot = self.x * other.x + self.y * other.y + self.z * other.z;
        cross.atan2(dot)
    }

    pub fn antipode(&self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

impl<T: Real> std::ops::Neg for Direction<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.antipode()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_unit() {
        assert!(Direction::new(1.0, 1.0, 0.0).is_err());
        assert!(Direction::new(0.6, 0.8, 0.0).is_ok());
        assert!(Direction::<f64>::normalize(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn angles_round_trip() {
        let n = Direction::from_angles(1.1_f64, 5.0);
        assert!((n.theta() - 1.1).abs() < 1e-14);
        assert!((n.phi() - 5.0).abs() < 1e-14);
        let s = Direction::<f64>::z_axis();
        assert_eq!(s.phi(), 0.0);
        assert_eq!(s.theta(), 0.0);
        assert!((s.antipode().theta() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn angle_between_close_directions() {
        let a = Direction::from_angles(1e-9_f64, 0.0);
        let b = Direction::<f64>::z_axis();
        assert!((a.angle_to(&b) - 1e-9).abs() < 1e-22);
    }
}
