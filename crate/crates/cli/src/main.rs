mod args;
mod commands;

use args::Cli;
use clap::Parser;
use std::process::ExitCode;

/// Exit status of a successful run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Done,
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let fail_on_no = cli.global.fail_on_no;
    match commands::run(cli) {
        Ok(Outcome::No) if fail_on_no => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<updom::Error>() {
        Some(err) if err.is_resource_error() => 3,
        _ => 2,
    }
}
