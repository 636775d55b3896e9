//! Command-line front end: an expression parser for generating functions,
//! one subcommand per engine pipeline, and the verification suite.

pub mod commands;
pub mod expr;
pub mod output;
pub mod verify;

pub use commands::{run, CommandResult};
pub use expr::{eval_to_series, parse, Expr, ParseError};
pub use output::{Format, Table};
pub use verify::{run_verify, OeisSource, VerifyReport};
