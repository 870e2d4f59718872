use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use ratiosel_cli::{bench, gappy, solve, verify, Cli, CliError, Command};
use serde::Serialize;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(json: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, json).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

/// Runs the command; `Ok(false)` means it ran but reported a failure.
fn run(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Solve(args) => {
            let report = solve::solve(args)?;
            emit(&to_json(&report), args.output.as_deref())?;
            Ok(true)
        }
        Command::Verify(args) => {
            let out = verify::verify(args)?;
            emit(&to_json(&out), args.output.as_deref())?;
            Ok(out.passed)
        }
        Command::Bench(args) => {
            let table = bench::bench(args)?;
            let text = table.to_text();
            emit(&to_json(&table), args.output.as_deref())?;
            if args.output.is_some() {
                print!("{text}");
            } else {
                eprint!("{text}");
            }
            Ok(true)
        }
        Command::Gappy(args) => {
            let report = gappy::gappy(args)?;
            emit(&to_json(&report), args.output.as_deref())?;
            Ok(report.bound_holds && report.identity_holds)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            println!("{}", to_json(&e.to_object()).trim_end());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
