//! Command-line construction and verification of subspace codes, and the
//! `SCODE v1` file format they are exchanged in.

pub mod codefile;
pub mod commands;

pub use codefile::{read_code, write_code, CodeFile, FormatError, MAGIC, TOOL_VERSION};
pub use commands::{CliError, CliResult, Check, BUDGET_VAR, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
