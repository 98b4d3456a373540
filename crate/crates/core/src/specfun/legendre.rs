use crate::{Error, Real, Result};

/// `P_0(x) ..= P_lmax(x)` at a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct LegendreTable<T> {
    x: T,
    values: Vec<T>,
}

impl<T: Real> LegendreTable<T> {
    pub fn x(&self) -> T {
        self.x
    }

    pub fn lmax(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, l: usize) -> Option<T> {
        self.values.get(l).copied()
    }

    /// Largest `|(n+1)P_{n+1} - (2n+1)xP_n + nP_{n-1}|` over interior `n`.
    pub fn recurrence_residual(&self) -> T {
        let p = &self.values;
        (1..p.len().saturating_sub(1))
            .map(|n| {
                let nf = T::from_usize_exact(n);
                ((nf + T::one()) * p[n + 1] - (nf + nf + T::one()) * self.x * p[n] + nf * p[n - 1])
                    .abs()
            })
            .fold(T::zero(), T::max)
    }
}

pub(crate) fn check_unit_interval<T: Real>(x: T) -> Result<T> {
    if x.is_nan() || x.abs() > T::one() + T::domain_slack() {
        return Err(Error::Domain {
            value: x.to_f64().unwrap_or(f64::NAN),
            domain: "[-1, 1]",
        });
    }
    Ok(x.max(-T::one()).min(T::one()))
}

/// Legendre polynomials `P_0 ..= P_lmax` at `x` by upward recurrence.
pub fn legendre_all<T: Real>(x: T, lmax: usize) -> Result<LegendreTable<T>> {
    let x = check_unit_interval(x)?;
    let mut values = Vec::with_capacity(lmax + 1);
    values.push(T::one());
    if lmax >= 1 {
        values.push(x);
    }
    for n in 1..lmax {
        let nf = T::from_usize_exact(n);
        let next = ((nf + nf + T::one()) * x * values[n] - nf * values[n - 1]) / (nf + T::one());
        values.push(next);
    }
    Ok(LegendreTable { x, values })
}

/// `(P_n(x), P_{n+1}(x))` without allocating.
pub fn legendre_pair<T: Real>(n: usize, x: T) -> Result<(T, T)> {
    let x = check_unit_interval(x)?;
    let (mut prev, mut cur) = (T::one(), x);
    for k in 1..=n {
        let kf = T::from_usize_exact(k);
        let next = ((kf + kf + T::one()) * x * cur - kf * prev) / (kf + T::one());
        prev = cur;
        cur = next;
    }
    Ok((prev, cur))
}

pub fn legendre<T: Real>(n: usize, x: T) -> Result<T> {
    legendre_pair(n, x).map(|(p, _)| p)
}
