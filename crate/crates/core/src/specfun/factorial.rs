use std::sync::OnceLock;

use crate::Real;

const TABLE_LEN: usize = 171;

fn table() -> &'static [f64; TABLE_LEN] {
    static TABLE: OnceLock<[f64; TABLE_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| {
        // 170! is the largest factorial representable in f64; the running
        // product carries ~n/2 ulp of relative error, far below 1e-13 after
        // taking the log.
        let mut out = [0.0; TABLE_LEN];
        let mut prod = 1.0_f64;
        for (n, slot) in out.iter_mut().enumerate().skip(1) {
            prod *= n as f64;
            *slot = prod.ln();
        }
        out
    })
}

fn stirling(n: f64) -> f64 {
    let inv = 1.0 / n;
    let inv2 = inv * inv;
    let series =
        inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0))));
    n * n.ln() - n + 0.5 * (std::f64::consts::TAU * n).ln() + series
}

/// `ln(n!)`.
pub fn log_factorial<T: Real>(n: usize) -> T {
    let v = if n < TABLE_LEN {
        table()[n]
    } else {
        stirling(n as f64)
    };
    T::lit(v)
}
