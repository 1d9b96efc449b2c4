use std::io;
use std::process::ExitCode;

use clap::Parser;

use entdist_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match entdist_cli::run(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("entdist: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
