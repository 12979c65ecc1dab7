use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    edgemu_cli::main_exit(edgemu_cli::Cli::parse())
}
