//! Command-line front end for `spinwigner`.
//!
//! Exit codes: 0 on success, 1 when a property or verification check fails,
//! 2 for usage and I/O errors.

pub mod args;
pub mod commands;
pub mod error;
pub mod random;
pub mod suites;

use std::io::Write;

use args::{Cli, Command};
pub use error::{CliError, CliResult};

/// Runs one parsed command, writing its normal output to `out`.
pub fn run(cli: &Cli, out: &mut impl Write) -> CliResult<()> {
    match &cli.command {
        Command::Figure1(a) => commands::figure1::run(a, out).map(|_| ()),
        Command::Props(a) => commands::props::run(a, out),
        Command::Verify(a) => commands::verify::run(a, out),
        Command::Correlate(a) => commands::correlate::run(a, out),
    }
}
