//! Command-line front end. Profiles go to CSV files next to a replayable
//! manifest; diagnostics print to stdout.

pub mod analyze;
pub mod args;
pub mod catalog;
pub mod error;
pub mod manifest;
pub mod output;
pub mod simulate;
pub mod verify;

use std::io::Write;

use args::{Cli, Command};
pub use error::{CliError, CliResult};

/// Runs one parsed command, writing human or JSON output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let dispatch = |out: &mut dyn Write| match &cli.command {
        Command::Catalog(a) => catalog::run(a, out),
        Command::Simulate(a) => simulate::simulate(a, out),
        Command::Line(a) => simulate::line(a, out),
        Command::Fractal(a) => analyze::fractal(a, out),
        Command::Converge(a) => analyze::converge(a, out),
        Command::Verify(a) => verify::run(a, out),
    };
    match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
            let mut buffer = Vec::new();
            let result = pool.install(|| dispatch(&mut buffer));
            out.write_all(&buffer).map_err(|e| CliError::Io {
                path: "<stdout>".into(),
                source: e,
            })?;
            result
        }
        None => dispatch(out),
    }
}
