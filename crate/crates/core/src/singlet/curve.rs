use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::singlet::closed_form::{
    wigner_asymptotic, wigner_asymptotic_at, wigner_cd, wigner_exact_sum,
};
use crate::specfun::clenshaw_curtis;
use crate::spin::SpinQuantumNumber;
use crate::{Real, Result};

/// How a curve's values were computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactSum,
    ChristoffelDarboux,
    Asymptotic,
}

impl Method {
    pub fn is_exact(self) -> bool {
        !matches!(self, Method::Asymptotic)
    }

    pub fn evaluate<T: Real>(self, j: SpinQuantumNumber, x: T) -> Result<T> {
        match self {
            Method::ExactSum => wigner_exact_sum(j, x),
            Method::ChristoffelDarboux => wigner_cd(j, x),
            Method::Asymptotic => wigner_asymptotic_at(j, x),
        }
    }
}

/// Chebyshev–Lobatto points `cos(k pi / (n-1))`, ascending, with the
/// endpoints exactly `-1` and `1`.
pub fn chebyshev_grid<T: Real>(n: usize) -> Vec<T> {
    assert!(n >= 2, "need at least two points");
    let last = n - 1;
    (0..n)
        .map(|i| {
            let k = last - i;
            if k == 0 {
                T::one()
            } else if k == last {
                -T::one()
            } else {
                (T::PI() * T::from_usize_exact(k) / T::from_usize_exact(last)).cos()
            }
        })
        .collect()
}

/// Singlet Wigner function sampled over `x = -n1.n2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingletWignerCurve<T> {
    pub j: SpinQuantumNumber,
    pub xs: Vec<T>,
    pub ws: Vec<T>,
    pub method: Method,
    chebyshev: bool,
}

impl<T: Real> SingletWignerCurve<T> {
    /// Samples on an arbitrary grid of points in `[-1, 1]`.
    pub fn on_grid(j: SpinQuantumNumber, xs: Vec<T>, method: Method) -> Result<Self> {
        let ws = xs
            .par_iter()
            .map(|&x| method.evaluate(j, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            j,
            xs,
            ws,
            method,
            chebyshev: false,
        })
    }

    /// Samples on [`chebyshev_grid`] of `points` points.
    pub fn chebyshev(j: SpinQuantumNumber, points: usize, method: Method) -> Result<Self> {
        let mut curve = Self::on_grid(j, chebyshev_grid(points), method)?;
        curve.chebyshev = true;
        Ok(curve)
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Value at the largest `x` (the peak at `x = 1` for standard grids).
    pub fn peak_value(&self) -> Option<T> {
        self.xs
            .iter()
            .zip(&self.ws)
            .max_by(|a, b| a.0.partial_cmp(b.0).expect("finite grid"))
            .map(|(_, &w)| w)
    }

    /// `8 pi^2 integral W dx`. Exact (Clenshaw–Curtis) on a Chebyshev grid
    /// with more points than the degree; trapezoid otherwise.
    pub fn normalization(&self) -> T {
        let eight_pi_sq = T::lit(8.0) * T::PI() * T::PI();
        if self.chebyshev {
            let rule = clenshaw_curtis::<T>(self.xs.len() - 1);
            return eight_pi_sq
                * rule
                    .weights
                    .iter()
                    .zip(&self.ws)
                    .map(|(&w, &v)| w * v)
                    .sum::<T>();
        }
        let half = T::lit(0.5);
        let mut s = T::zero();
        for k in 1..self.xs.len() {
            s += (self.xs[k] - self.xs[k - 1]).abs() * (self.ws[k] + self.ws[k - 1]) * half;
        }
        eight_pi_sq * s
    }

    /// Gap `1 - x` of the first sign change walking down from the largest
    /// `x`, linearly interpolated between the bracketing samples.
    pub fn first_sign_change_gap(&self) -> Option<T> {
        let mut idx: Vec<usize> = (0..self.xs.len()).collect();
        idx.sort_by(|&a, &b| self.xs[b].partial_cmp(&self.xs[a]).expect("finite grid"));
        for w in idx.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (wa, wb) = (self.ws[a], self.ws[b]);
            if wa != T::zero() && (wa < T::zero()) != (wb < T::zero()) || wb == T::zero() {
                let t = wa / (wa - wb);
                let x = self.xs[a] + (self.xs[b] - self.xs[a]) * t;
                return Some(T::one() - x);
            }
        }
        None
    }

    /// Sign changes along the grid.
    pub fn sign_changes(&self) -> usize {
        let nonzero: Vec<T> = self
            .ws
            .iter()
            .copied()
            .filter(|&w| w != T::zero())
            .collect();
        nonzero
            .windows(2)
            .filter(|w| (w[0] < T::zero()) != (w[1] < T::zero()))
            .count()
    }
}

/// Deviation of the Bessel form from the exact sum over an angle window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticDeviation<T> {
    pub max_abs_error: T,
    /// Largest `|W|` of the exact sum in the window.
    pub max_abs_exact: T,
    /// `max_abs_error / max_abs_exact`.
    pub relative_to_peak: T,
    /// Largest error measured against the local oscillation amplitude
    /// `(2j+1)/(16pi^2) (1-cos g)^{-1} (g^3/sin g)^{1/2} (2/(pi (2j+1) g))^{1/2}`.
    pub relative_to_envelope: T,
}

/// Compares [`wigner_asymptotic`] with the exact sum at `samples` angles
/// evenly spaced over `[gamma_lo, gamma_hi]`.
pub fn asymptotic_deviation<T: Real>(
    j: SpinQuantumNumber,
    gamma_lo: T,
    gamma_hi: T,
    samples: usize,
) -> Result<AsymptoticDeviation<T>> {
    let n = T::from_usize_exact(j.dim());
    let c = T::one() / (T::lit(16.0) * T::PI() * T::PI());
    let rows = (0..samples)
        .into_par_iter()
        .map(|k| {
            let g = gamma_lo
                + (gamma_hi - gamma_lo) * T::from_usize_exact(k)
                    / T::from_usize_exact(samples.max(2) - 1);
            let exact = wigner_exact_sum(j, g.cos())?;
            let approx = wigner_asymptotic(j, g)?;
            let half_sin = (g * T::lit(0.5)).sin();
            let env = n * c / (T::lit(2.0) * half_sin * half_sin)
                * (g * g * g / g.sin()).sqrt()
                * (T::lit(2.0) / (T::PI() * n * g)).sqrt();
            Ok((
                (approx - exact).abs(),
                exact.abs(),
                (approx - exact).abs() / env,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let max_abs_error = rows.iter().map(|r| r.0).fold(T::zero(), T::max);
    let max_abs_exact = rows.iter().map(|r| r.1).fold(T::zero(), T::max);
    Ok(AsymptoticDeviation {
        max_abs_error,
        max_abs_exact,
        relative_to_peak: max_abs_error / max_abs_exact,
        relative_to_envelope: rows.iter().map(|r| r.2).fold(T::zero(), T::max),
    })
}
