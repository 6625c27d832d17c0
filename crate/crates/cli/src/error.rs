//! Error taxonomy of the command line: parse errors (exit 3) for malformed
//! input text, domain errors (exit 2) for well-formed but invalid data or
//! unsatisfiable requests, and internal errors (exit 4) for violations of
//! invariants the library guarantees, which must never occur.

use svlab_core::Error;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Domain(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 3,
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Domain(m) | CliError::Internal(m) => m,
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        CliError::Domain(msg.into())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            // These two can only fire if a library guarantee fails.
            Error::LpFailure(_) | Error::Inconsistent => CliError::Internal(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}
