use std::process::ExitCode;

fn main() -> ExitCode {
    nhood::cli::main_with(std::env::args_os())
}
