//! IO, serialization and command implementations for the `tensamp` binary.
//!
//! The JSON model format keeps every rational as an exact `"p/q"` (or
//! `"n"`) string — unreduced input is accepted and canonicalized on write,
//! and no number ever passes through floating point. Canonical output form
//! is pretty-printed JSON with sorted keys and a trailing newline, which
//! makes build/parse/re-serialize the identity on canonical files.

pub mod commands;
pub mod model;
pub mod plot;
pub mod report;

use std::fmt;

/// Errors carrying the process exit code: 64 for parse errors, 65 for
/// usage/arity/builder errors, 66 for unreadable input, 70 for internal
/// faults. Exit codes 0/1/2 are reserved for yes/no/unknown verdicts.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: 64,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 65,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CliError {
            code: 66,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError {
            code: 70,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for CliError {}
