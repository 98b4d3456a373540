use std::io::Write;

use serde::Serialize;
use spinwigner::singlet::{correlation_dense, correlation_expected, correlation_phase_space};
use spinwigner::spin::TWO_SPIN_ORACLE_MAX_TWICE_J;
use spinwigner::Direction;

use crate::args::CorrelateArgs;
use crate::error::{CliError, CliResult};

/// Accepted deviation of `|a|` and `|b|` from one.
pub const UNIT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct Correlation {
    pub j: String,
    pub twice_j: u32,
    pub a: [f64; 3],
    pub b: [f64; 3],
    /// Phase-space quadrature against the closed-form Wigner function.
    pub phase_space: f64,
    /// `-(j(j+1)/3) a.b`.
    pub expected: f64,
    /// Dense `Tr(rho (J.a) ⊗ (J.b))`, present with `--oracle`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<f64>,
}

fn unit(v: [f64; 3], flag: &str) -> CliResult<Direction<f64>> {
    Direction::with_tolerance(v[0], v[1], v[2], UNIT_TOLERANCE)
        .map_err(|e| CliError::Usage(format!("--{flag} {},{},{}: {e}", v[0], v[1], v[2])))
}

pub fn compute(args: &CorrelateArgs) -> CliResult<Correlation> {
    let j = args.spin.resolve();
    let a = unit(args.a, "a")?;
    let b = unit(args.b, "b")?;
    if args.oracle && j.twice() > TWO_SPIN_ORACLE_MAX_TWICE_J {
        return Err(CliError::Usage(format!(
            "--oracle needs 2j <= {TWO_SPIN_ORACLE_MAX_TWICE_J}, got j = {j}"
        )));
    }
    Ok(Correlation {
        j: j.to_string(),
        twice_j: j.twice(),
        a: a.to_array(),
        b: b.to_array(),
        phase_space: correlation_phase_space(j, &a, &b)?,
        expected: correlation_expected(j, &a, &b),
        oracle: if args.oracle {
            Some(correlation_dense(j, &a, &b)?)
        } else {
            None
        },
    })
}

pub fn run(args: &CorrelateArgs, out: &mut impl Write) -> CliResult<()> {
    let c = compute(args)?;
    let text = serde_json::to_string_pretty(&c).expect("correlation serializes");
    writeln!(out, "{text}").map_err(|e| CliError::io("<stdout>", e))
}
