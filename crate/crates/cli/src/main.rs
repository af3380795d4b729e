use std::io;
use std::process::ExitCode;

use clap::Parser;
use lamb_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match lamb_cli::run(&cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lamb: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
