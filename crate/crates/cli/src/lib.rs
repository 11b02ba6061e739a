pub mod expr;
pub mod run;

pub use expr::{parse_expr, Context, Expr, ParseError};
pub use run::{emit, emit_report, run_suite, Command, ConfigError, Format, Outcome, RunConfig};
