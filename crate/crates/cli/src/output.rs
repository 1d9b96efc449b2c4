use std::fs::File;
use std::io::Write;
use std::path::Path;

use crate::error::CliError;

/// Fixed 16-significant-digit scientific notation for every emitted value.
pub fn num(x: f64) -> String {
    format!("{x:.15e}")
}

/// Sends a finished document to `path`, or to `stdout` when there is none.
pub fn emit(document: &[u8], path: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(path) => {
            let wrap = |source| CliError::Output {
                path: path.to_path_buf(),
                source,
            };
            let mut file = File::create(path).map_err(wrap)?;
            file.write_all(document).map_err(wrap)?;
            file.flush().map_err(wrap)
        }
        None => {
            stdout.write_all(document)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
