use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use spinwigner_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = spinwigner_cli::run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("spinwigner: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
