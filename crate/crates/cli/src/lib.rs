//! Command implementations behind the `idealis` binary.

pub mod dot;
pub mod property_expr;
pub mod report;
pub mod search;
pub mod verify;

use std::fmt;

use idealis_core::{Caps, Error};

pub const TOOL_VERSION: &str = concat!("idealis ", env!("CARGO_PKG_VERSION"));

/// Environment variable that sets the element cap when `--cap` is absent.
pub const CAP_ENV: &str = "IDEALIS_CAP";

/// A failure with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }

    pub fn failure(message: impl Into<String>) -> Self {
        CliError { code: 1, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_cap() { 3 } else { 2 };
        CliError { code, message: e.to_string() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// `--cap` wins over `IDEALIS_CAP`, which wins over the default.
pub fn resolve_caps(flag: Option<usize>, env: Option<&str>) -> Result<Caps, CliError> {
    let caps = Caps::default();
    if let Some(n) = flag {
        return Ok(caps.with_elements(n));
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map(|n| caps.with_elements(n))
            .map_err(|_| CliError::usage(format!("{CAP_ENV} must be a positive integer, got `{v}`"))),
        None => Ok(caps),
    }
}
