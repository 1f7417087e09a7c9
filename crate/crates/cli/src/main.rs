use std::process::ExitCode;

use clap::Parser;
use sgut::args::Cli;
use sgut::{run, Outcome};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_error = e.use_stderr();
            // prints help/version to stdout, usage errors to stderr
            let _ = e.print();
            return ExitCode::from(u8::from(usage_error));
        }
    };
    match run(cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Findings) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
