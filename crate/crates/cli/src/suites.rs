//! Verification suites shared by `verify` and the acceptance tests.
//!
//! Each suite returns one [`SuiteResult`] per spin with the worst residual
//! seen at that spin.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use spinwigner::singlet::{
    correlation_dense, correlation_expected, correlation_phase_space, normalization,
    wigner_two_sphere,
};
use spinwigner::spin::{singlet_density, TWO_SPIN_ORACLE_MAX_TWICE_J};
use spinwigner::tolerance::Tolerances;
use spinwigner::transforms::exact::weyl_weight_exact_failures;
use spinwigner::transforms::{
    project_pair_to_harmonics, q_transform_oracle, quadrature_for_spin, traciality_check,
    weyl_from_q_pair, wigner_normalize, KernelCoefficients, SphereSamples,
};
use spinwigner::{Result, SpinContent, SpinQuantumNumber};

use crate::random::{random_direction, random_hermitian};

/// Random hermitian pairs per spin in the one-spin traciality suite.
pub const TRACIALITY_PAIRS: usize = 20;
/// Largest `2j` for the (slower) two-spin traciality pairs.
pub const TWO_SPIN_TRACIALITY_MAX_TWICE_J: u32 = 4;
pub const TWO_SPIN_TRACIALITY_PAIRS: usize = 3;
/// Random direction pairs per spin in the correlation suite.
pub const CORRELATION_PAIRS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Oracle,
    Traciality,
    Normalization,
    KernelIdentity,
    KernelIdentityExact,
    Correlation,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Oracle,
        Suite::Traciality,
        Suite::Normalization,
        Suite::KernelIdentity,
        Suite::KernelIdentityExact,
        Suite::Correlation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Traciality => "traciality",
            Suite::Normalization => "normalization",
            Suite::KernelIdentity => "kernel_identity",
            Suite::KernelIdentityExact => "kernel_identity_exact",
            Suite::Correlation => "correlation",
        }
    }

    pub fn tolerance(self, tol: &Tolerances) -> f64 {
        match self {
            Suite::Oracle => tol.oracle_equivalence_abs,
            Suite::Traciality => tol.traciality_abs,
            Suite::Normalization => tol.normalization_abs,
            Suite::KernelIdentity => tol.kernel_identity_rel,
            Suite::KernelIdentityExact => 0.0,
            Suite::Correlation => tol.correlation_abs,
        }
    }

    /// Largest `2j` the suite runs at.
    pub fn ceiling(self) -> Option<u32> {
        match self {
            Suite::Oracle | Suite::Correlation => Some(TWO_SPIN_ORACLE_MAX_TWICE_J),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: Suite,
    pub twice_j: u32,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl SuiteResult {
    fn new(suite: Suite, j: SpinQuantumNumber, residual: f64, tolerance: f64) -> Self {
        Self {
            suite,
            twice_j: j.twice(),
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

/// Dense singlet → Q → pair projection → `1/S` per sphere → normalization,
/// compared with the closed form at every pair of quadrature nodes.
pub fn oracle_residual(j: SpinQuantumNumber) -> Result<f64> {
    let quad = quadrature_for_spin::<f64>(j);
    let q = match q_transform_oracle(&singlet_density::<f64>(j), &quad)? {
        SphereSamples::Two(q) => q,
        SphereSamples::One(_) => unreachable!("the singlet lives on two spins"),
    };
    let c = project_pair_to_harmonics(&q, j.twice() as usize, &quad)?;
    let w = wigner_normalize(&weyl_from_q_pair(&c, j)?, j, 2).synthesize_on(&quad);
    let nodes = quad.nodes();
    let mut worst = 0.0_f64;
    for (p, a) in nodes.iter().enumerate() {
        for (r, b) in nodes.iter().enumerate() {
            let v = w.at(p, r);
            worst = worst
                .max((v.re - wigner_two_sphere(j, &a.direction, &b.direction)).abs())
                .max(v.im.abs());
        }
    }
    Ok(worst)
}

/// Worst `|Tr(FG)/dim - <Phi_F Phi_G>|` over `pairs` random hermitian pairs.
pub fn traciality_residual(content: SpinContent, pairs: usize, seed: u64) -> Result<f64> {
    let j = content.spin();
    let quad = quadrature_for_spin::<f64>(j);
    let mut rng = ChaCha8Rng::seed_from_u64(
        seed ^ (u64::from(j.twice()) << 32) ^ u64::from(content.num_spins()),
    );
    let mut worst = 0.0_f64;
    for _ in 0..pairs {
        let f = random_hermitian(content, &mut rng);
        let g = random_hermitian(content, &mut rng);
        let (lhs, rhs) = traciality_check(&f, &g, &quad)?;
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

/// `|8 pi^2 integral W - 1|`.
pub fn normalization_residual(j: SpinQuantumNumber) -> f64 {
    (normalization::<f64>(j) - 1.0).abs()
}

/// Worst relative error of `S^-2 A (2j+1) = 1` over `l <= 2j`.
pub fn kernel_identity_residual(j: SpinQuantumNumber) -> f64 {
    let k = KernelCoefficients::<f64>::new(j);
    let n = j.dim() as f64;
    (0..=k.lmax())
        .map(|l| (k.weyl_weight(l) * n - 1.0).abs())
        .fold(0.0, f64::max)
}

/// Number of degrees where the rational identity fails (always 0 when it
/// holds).
pub fn kernel_identity_exact_failures(j: SpinQuantumNumber) -> Result<usize> {
    Ok(weyl_weight_exact_failures(j)?.len())
}

/// Worst disagreement among phase-space, dense-trace and
/// `-(j(j+1)/3) a.b` values over random direction pairs.
pub fn correlation_residual(j: SpinQuantumNumber, pairs: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (u64::from(j.twice()) << 40));
    let mut worst = 0.0_f64;
    for _ in 0..pairs {
        let a = random_direction(&mut rng);
        let b = random_direction(&mut rng);
        let expected = correlation_expected(j, &a, &b);
        let phase = correlation_phase_space(j, &a, &b)?;
        let dense = correlation_dense(j, &a, &b)?;
        worst = worst
            .max((phase - dense).abs())
            .max((dense - expected).abs());
    }
    Ok(worst)
}

/// Runs `suite` at `j`. `None` when `j` is above the suite's ceiling.
pub fn run_suite(
    suite: Suite,
    j: SpinQuantumNumber,
    tol: &Tolerances,
    seed: u64,
) -> Result<Option<SuiteResult>> {
    if suite.ceiling().is_some_and(|c| j.twice() > c) {
        return Ok(None);
    }
    let t = suite.tolerance(tol);
    let residual = match suite {
        Suite::Oracle => oracle_residual(j)?,
        Suite::Traciality => {
            let mut r = traciality_residual(SpinContent::One(j), TRACIALITY_PAIRS, seed)?;
            if j.twice() <= TWO_SPIN_TRACIALITY_MAX_TWICE_J {
                r = r.max(traciality_residual(
                    SpinContent::Two(j),
                    TWO_SPIN_TRACIALITY_PAIRS,
                    seed,
                )?);
            }
            r
        }
        Suite::Normalization => normalization_residual(j),
        Suite::KernelIdentity => kernel_identity_residual(j),
        Suite::KernelIdentityExact => kernel_identity_exact_failures(j)? as f64,
        Suite::Correlation => correlation_residual(j, CORRELATION_PAIRS, seed)?,
    };
    Ok(Some(SuiteResult::new(suite, j, residual, t)))
}
