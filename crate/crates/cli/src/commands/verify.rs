use std::io::Write;

use spinwigner::tolerance::Tolerances;

use crate::args::VerifyArgs;
use crate::error::{CliError, CliResult};
use crate::suites::{run_suite, Suite, SuiteResult};

/// All suite results for `2j = 0 ..= 2 j_max`.
pub fn results(args: &VerifyArgs) -> CliResult<Vec<SuiteResult>> {
    let mut tol = args.tolerances.apply(Tolerances::default())?;
    if let Some(t) = args.tol {
        if !(t.is_finite() && t >= 0.0) {
            return Err(CliError::Usage(format!(
                "--tol must be a non-negative number, got {t}"
            )));
        }
        tol.oracle_equivalence_abs = t;
        tol.traciality_abs = t;
        tol.normalization_abs = t;
        tol.kernel_identity_rel = t;
        tol.correlation_abs = t;
    }
    let mut out = Vec::new();
    for suite in Suite::ALL {
        for j in args.j_max.ladder_to() {
            if let Some(r) = run_suite(suite, j, &tol, args.seed)? {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Pass/fail matrix (suites by `2j`) and the worst residual relative to its
/// tolerance.
pub fn render(
    results: &[SuiteResult],
    max_twice_j: u32,
    w: &mut impl Write,
) -> std::io::Result<()> {
    let width = Suite::ALL.iter().map(|s| s.name().len()).max().unwrap_or(0);
    write!(w, "{:width$}", "2j")?;
    for t in 0..=max_twice_j {
        write!(w, " {t:>4}")?;
    }
    writeln!(w)?;
    for suite in Suite::ALL {
        write!(w, "{:width$}", suite.name())?;
        for t in 0..=max_twice_j {
            let cell = match results.iter().find(|r| r.suite == suite && r.twice_j == t) {
                Some(r) if r.pass => "pass",
                Some(_) => "FAIL",
                None => "-",
            };
            write!(w, " {cell:>4}")?;
        }
        writeln!(w)?;
    }
    if let Some(worst) = worst(results) {
        writeln!(
            w,
            "worst residual: {} at 2j = {}: {:e} (tolerance {:e})",
            worst.suite.name(),
            worst.twice_j,
            worst.residual,
            worst.tolerance
        )?;
    }
    Ok(())
}

fn worst(results: &[SuiteResult]) -> Option<&SuiteResult> {
    let ratio = |r: &SuiteResult| {
        if r.tolerance > 0.0 {
            r.residual / r.tolerance
        } else if r.residual > 0.0 {
            f64::INFINITY
        } else {
            0.0
        }
    };
    results.iter().max_by(|a, b| ratio(a).total_cmp(&ratio(b)))
}

pub fn run(args: &VerifyArgs, out: &mut impl Write) -> CliResult<()> {
    let results = results(args)?;
    render(&results, args.j_max.twice(), out).map_err(|e| CliError::io("<stdout>", e))?;
    let failed = results.iter().filter(|r| !r.pass).count();
    if failed > 0 {
        let w = worst(&results).expect("failures imply results");
        return Err(CliError::Failed(format!(
            "{failed} of {} checks failed; worst: {} at 2j = {} with residual {:e}",
            results.len(),
            w.suite.name(),
            w.twice_j,
            w.residual
        )));
    }
    Ok(())
}
