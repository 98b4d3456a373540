use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spinwigner::tolerance::Tolerances;
use spinwigner::SpinQuantumNumber;

use crate::error::{CliError, CliResult};

/// Environment variable naming the default output directory of `figure1`.
pub const OUT_DIR_ENV: &str = "SPINWIGNER_OUT_DIR";

/// The spins plotted in the reference figure: j = 5, 19/2, 40.
pub const FIGURE_SPINS: [SpinQuantumNumber; 3] = [
    SpinQuantumNumber::from_twice(10),
    SpinQuantumNumber::from_twice(19),
    SpinQuantumNumber::from_twice(80),
];

pub const MIN_POINTS: u64 = 16;

#[derive(Debug, Parser)]
#[command(
    name = "spinwigner",
    version,
    about = "Spin-j Wigner functions of the two-spin singlet"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample W(x) on a Chebyshev grid: exact sum, Christoffel–Darboux and Bessel forms.
    Figure1(Figure1Args),
    /// Endpoint values, first zero, envelope and zero count as JSON.
    Props(PropsArgs),
    /// Run the oracle, traciality, normalization, kernel and correlation suites.
    Verify(VerifyArgs),
    /// Singlet correlation of J.a and J.b by phase-space quadrature.
    Correlate(CorrelateArgs),
}

/// `--j 5,19/2` or `--twice-j 10,19`. Parsed exactly; never via floats.
#[derive(Debug, Clone, Args)]
pub struct SpinList {
    /// Spins as integers, halves ("19/2") or decimals ending in .0/.5.
    #[arg(long = "j", value_delimiter = ',', conflicts_with = "twice_j")]
    pub j: Vec<SpinQuantumNumber>,
    /// Spins given as the integer 2j.
    #[arg(long = "twice-j", value_delimiter = ',')]
    pub twice_j: Vec<u32>,
}

impl SpinList {
    pub fn resolve(&self, default: &[SpinQuantumNumber]) -> Vec<SpinQuantumNumber> {
        if !self.j.is_empty() {
            self.j.clone()
        } else if !self.twice_j.is_empty() {
            self.twice_j
                .iter()
                .map(|&t| SpinQuantumNumber::from_twice(t))
                .collect()
        } else {
            default.to_vec()
        }
    }
}

/// One spin, `--j J` or `--twice-j N`.
#[derive(Debug, Clone, Args)]
pub struct SingleSpin {
    #[arg(
        long = "j",
        conflicts_with = "twice_j",
        required_unless_present = "twice_j"
    )]
    pub j: Option<SpinQuantumNumber>,
    #[arg(long = "twice-j")]
    pub twice_j: Option<u32>,
}

impl SingleSpin {
    pub fn resolve(&self) -> SpinQuantumNumber {
        match (self.j, self.twice_j) {
            (Some(j), _) => j,
            (None, Some(t)) => SpinQuantumNumber::from_twice(t),
            (None, None) => unreachable!("clap enforces one of --j / --twice-j"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Figure1Args {
    #[command(flatten)]
    pub spins: SpinList,
    /// Grid size per curve.
    #[arg(long, default_value_t = 4000, value_parser = clap::value_parser!(u64).range(MIN_POINTS..))]
    pub points: u64,
    /// Output directory.
    #[arg(long, env = OUT_DIR_ENV, default_value = "figure1")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Per-flag overrides of the defaults in [`Tolerances`].
#[derive(Debug, Clone, Default, Args)]
pub struct ToleranceArgs {
    #[arg(long)]
    pub endpoint_rel: Option<f64>,
    #[arg(long)]
    pub kernel_identity_rel: Option<f64>,
    #[arg(long)]
    pub oracle_equivalence_abs: Option<f64>,
    #[arg(long)]
    pub traciality_abs: Option<f64>,
    #[arg(long)]
    pub normalization_abs: Option<f64>,
    #[arg(long)]
    pub first_zero_rel_small_j: Option<f64>,
    #[arg(long)]
    pub first_zero_rel_large_j: Option<f64>,
    #[arg(long)]
    pub asymptotic_rel: Option<f64>,
    #[arg(long)]
    pub envelope_exponent_abs: Option<f64>,
    #[arg(long)]
    pub correlation_abs: Option<f64>,
}

impl ToleranceArgs {
    pub fn apply(&self, base: Tolerances) -> CliResult<Tolerances> {
        let mut t = base;
        let slots: [(Option<f64>, &mut f64, &str); 10] = [
            (self.endpoint_rel, &mut t.endpoint_rel, "endpoint-rel"),
            (
                self.kernel_identity_rel,
                &mut t.kernel_identity_rel,
                "kernel-identity-rel",
            ),
            (
                self.oracle_equivalence_abs,
                &mut t.oracle_equivalence_abs,
                "oracle-equivalence-abs",
            ),
            (self.traciality_abs, &mut t.traciality_abs, "traciality-abs"),
            (
                self.normalization_abs,
                &mut t.normalization_abs,
                "normalization-abs",
            ),
            (
                self.first_zero_rel_small_j,
                &mut t.first_zero_rel_small_j,
                "first-zero-rel-small-j",
            ),
            (
                self.first_zero_rel_large_j,
                &mut t.first_zero_rel_large_j,
                "first-zero-rel-large-j",
            ),
            (self.asymptotic_rel, &mut t.asymptotic_rel, "asymptotic-rel"),
            (
                self.envelope_exponent_abs,
                &mut t.envelope_exponent_abs,
                "envelope-exponent-abs",
            ),
            (
                self.correlation_abs,
                &mut t.correlation_abs,
                "correlation-abs",
            ),
        ];
        for (over, slot, name) in slots {
            if let Some(v) = over {
                if !(v.is_finite() && v >= 0.0) {
                    return Err(CliError::Usage(format!(
                        "--{name} must be a non-negative number, got {v}"
                    )));
                }
                *slot = v;
            }
        }
        Ok(t)
    }
}

#[derive(Debug, Clone, Args)]
pub struct PropsArgs {
    #[command(flatten)]
    pub spins: SpinList,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Largest spin covered by every suite.
    #[arg(long, default_value = "4")]
    pub j_max: SpinQuantumNumber,
    /// Single threshold replacing each suite's default tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Seed for the random operators and directions.
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[command(flatten)]
    pub tolerances: ToleranceArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CorrelateArgs {
    #[command(flatten)]
    pub spin: SingleSpin,
    /// Unit vector x,y,z for the first spin.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
    pub a: [f64; 3],
    /// Unit vector x,y,z for the second spin.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_vector)]
    pub b: [f64; 3],
    /// Also report the dense-matrix trace.
    #[arg(long)]
    pub oracle: bool,
}

fn parse_vector(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z, got {s:?}"));
    }
    let mut out = [0.0; 3];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = p.parse().map_err(|e| format!("{p:?}: {e}"))?;
    }
    Ok(out)
}
