use std::process::ExitCode;

use clap::Parser;
use dthermo_cli::args::Cli;

fn main() -> ExitCode {
    dthermo_cli::main_with(&Cli::parse())
}
