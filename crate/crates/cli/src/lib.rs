//! Command-line front end: parses ring and fan description files, runs the
//! chamber machinery and prints human- or machine-readable reports.

pub mod cli;
pub mod report;
pub mod spec_file;
pub mod svg;

/// Errors carrying the process exit code: 2 for unreadable or unparsable
/// input, 3 for input that parses but violates a model invariant, 4 for
/// requests outside an operation's domain.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    InvalidModel(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::InvalidModel(_) => 3,
            CliError::Domain(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::InvalidModel(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<spec_file::ParseError> for CliError {
    fn from(e: spec_file::ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

/// Model-construction and domain errors from the core crate, mapped onto
/// the exit-code classes.
pub fn from_core(e: secfan_core::Error) -> CliError {
    use secfan_core::Error::*;
    match e {
        NotEffective | InvalidTorsion | InvalidFan(_) => CliError::InvalidModel(e.to_string()),
        _ => CliError::Domain(e.to_string()),
    }
}
