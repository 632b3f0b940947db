use std::process::ExitCode;

use chromstab_cli::cli::Cli;
use clap::Parser;

fn main() -> ExitCode {
    ExitCode::from(chromstab_cli::run(Cli::parse()))
}
