//! Command-line front end for `segal-core`: argument parsing, JSON input
//! formats, deterministic JSON reports and the embedded self-test suites.

pub mod cli;
pub mod input;
pub mod pretty;
pub mod report;
pub mod selftest;

pub use cli::{run, Outcome};

#[derive(Debug, thiserror::Error)]
pub enum ToolError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] segal_core::Error),
}

impl ToolError {
    pub fn code(&self) -> &'static str {
        match self {
            ToolError::Usage(_) => "usage",
            ToolError::Input(_) => "input",
            ToolError::Core(e) => e.code(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            ToolError::Usage(_) => 2,
            _ => 1,
        }
    }
}
