//! Command-line front end: the expression language and the command implementations.

pub mod commands;
pub mod expr;

pub use commands::{run, Command, FieldChoice, Options, Outcome};
pub use expr::{evaluate, parse, print, Context, Expr};
