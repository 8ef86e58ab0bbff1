mod config;
mod error;
mod run;

use std::panic;
use std::process::ExitCode;

use clap::Parser;

use config::{Args, CliConfig, DATA_ENV};
use error::CliError;

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let data_dir = std::env::var_os(DATA_ENV).filter(|v| !v.is_empty()).map(Into::into);

    let outcome = CliConfig::from_args(args, data_dir)
        .and_then(|cfg| {
            panic::catch_unwind(|| run::run(&cfg))
                .unwrap_or_else(|_| Err(CliError::Internal("unexpected panic".into())))
        });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("latin2ajami: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
