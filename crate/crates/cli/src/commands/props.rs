use std::io::Write;

use spinwigner::singlet::{
    envelope_exponent, property_report_with_exponent, PropertyCheck, PropertyReport,
    ENVELOPE_LADDER,
};
use spinwigner::tolerance::Tolerances;

use crate::args::{PropsArgs, FIGURE_SPINS};
use crate::error::{CliError, CliResult};

/// A failed check labelled with the spin it belongs to.
pub type FailedCheck = (String, PropertyCheck);

/// Reports for every requested spin plus the checks that failed.
pub fn reports(args: &PropsArgs) -> CliResult<(Vec<PropertyReport<f64>>, Vec<FailedCheck>)> {
    let tol = args.tolerances.apply(Tolerances::default())?;
    let exponent = envelope_exponent::<f64>(&ENVELOPE_LADDER);
    let mut all = Vec::new();
    let mut failed = Vec::new();
    for j in args.spins.resolve(&FIGURE_SPINS) {
        let r = property_report_with_exponent::<f64>(j, exponent)?;
        failed.extend(
            r.checks(&tol)
                .into_iter()
                .filter(|c| !c.pass)
                .map(|c| (r.j.clone(), c)),
        );
        all.push(r);
    }
    Ok((all, failed))
}

/// JSON array of reports on `out`; a failed check is an error naming the
/// field.
pub fn run(args: &PropsArgs, out: &mut impl Write) -> CliResult<()> {
    let (all, failed) = reports(args)?;
    let text = serde_json::to_string_pretty(&all).expect("reports serialize");
    writeln!(out, "{text}").map_err(|e| CliError::io("<stdout>", e))?;
    if failed.is_empty() {
        return Ok(());
    }
    let lines: Vec<String> = failed
        .iter()
        .map(|(j, c)| {
            format!(
                "j = {j}: {} = {:e}, expected {:e} (residual {:e} > tolerance {:e})",
                c.field, c.value, c.expected, c.residual, c.tolerance
            )
        })
        .collect();
    Err(CliError::Failed(format!(
        "property check failed\n{}",
        lines.join("\n")
    )))
}
