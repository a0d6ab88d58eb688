use std::process::ExitCode;

use clap::Parser;
use lencat_cli::{emit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(outcome) => match emit(&cli, &outcome.report) {
            Ok(()) => outcome.code,
            Err(e) => {
                eprintln!("error: {}", e);
                e.code()
            }
        },
        Err(e) => {
            eprintln!("error: {}", e);
            e.code()
        }
    };
    ExitCode::from(code)
}
