//! Library side of the `wes` command: input parsing, reports and the
//! subcommands themselves. `main.rs` only handles arguments and exit codes.

pub mod commands;
pub mod input;
pub mod report;

use std::fmt;

use wes_core::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const HYPOTHESIS: u8 = 2;
    pub const DISAGREEMENT: u8 = 3;
    pub const BUDGET: u8 = 4;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(message: String) -> Self {
        CliError {
            code: exit::INPUT,
            message,
        }
    }

    pub fn shape(message: String) -> Self {
        CliError {
            code: exit::INPUT,
            message,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::HypothesisViolation(_) => exit::HYPOTHESIS,
            Error::BudgetExceeded { .. } => exit::BUDGET,
            _ => exit::INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// What a command produced: text for standard output and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: exit::OK,
        }
    }
}
