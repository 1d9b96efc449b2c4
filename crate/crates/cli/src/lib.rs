//! Command-line front end for the `entdist` library.

pub mod args;
pub mod compare;
pub mod error;
pub mod figure;
pub mod output;
pub mod verify;

use std::io::Write;

use args::{Cli, Command, DEFAULT_SWEEP_RADII};
use error::CliError;

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Compare(args) => {
            let config = args.into_config(&[1.0])?;
            compare::cmd_compare("compare", &config, stdout)
        }
        Command::Sweep(args) => {
            let config = args.into_config(&DEFAULT_SWEEP_RADII)?;
            compare::cmd_compare("sweep", &config, stdout)
        }
        Command::Figure(args) => figure::cmd_figure(&args, stdout),
        Command::Verify(args) => verify::cmd_verify(args.trials, args.seed, stdout),
    }
}
