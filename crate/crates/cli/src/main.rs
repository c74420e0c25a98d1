mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use commands::CliError;
use output::{render, Envelope};

fn run(cli: &Cli) -> Result<output::Outcome, CliError> {
    let global = &cli.global;
    match &cli.command {
        Command::Compute { input } => commands::compute(global, input.clone()),
        Command::Family {
            name,
            params,
            verify,
        } => commands::family(global, name, params, *verify),
        Command::Verify { theorems, search } => {
            commands::search(global, "verify", theorems, search)
        }
        Command::Search { theorems, search } => {
            commands::search(global, "search", theorems, search)
        }
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Compute { .. } => "compute",
        Command::Family { .. } => "family",
        Command::Verify { .. } => "verify",
        Command::Search { .. } => "search",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            println!("{}", render(&outcome, cli.global.table, cli.global.quiet));
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if !cli.global.quiet && !cli.global.table {
                let mut envelope = Envelope::new(command_name(&cli.command), json!(null));
                envelope.diagnostics.push(e.to_string());
                println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope).expect("envelope serializes")
                );
            }
            ExitCode::from(e.exit_code())
        }
    }
}
