//! Exit codes for error paths. Successful runs exit with the verdict or
//! decision code chosen by each command.

use normcheck::Error;

/// Bad flags, unparsable input, non-square or mismatched matrices.
pub const USAGE: u8 = 64;
/// A mathematical precondition does not hold, e.g. `A` is not normal.
pub const HYPOTHESIS: u8 = 65;
/// An input file cannot be read.
pub const NO_INPUT: u8 = 66;
/// A numerical routine failed.
pub const SOFTWARE: u8 = 70;
/// An output file cannot be written.
pub const CANT_CREATE: u8 = 73;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotSquare { .. }
            | Error::DimensionMismatch(_)
            | Error::InvalidMatrix(_)
            | Error::InvalidArgument(_)
            | Error::Parse(_) => USAGE,
            Error::HypothesisViolated(_) => HYPOTHESIS,
            _ => SOFTWARE,
        };
        Self::new(code, e.to_string())
    }
}
