//! Text frontend: the block-based presentation language, its canonical
//! printers, machine-readable JSON reports, and the command-line
//! interface.

pub mod cli;
pub mod model;
pub mod parse;
pub mod report;

pub use model::{build_env, print_env, ActionDef, BuildError, Env, HopfDef, HopfSource};
pub use parse::{
    parse_document, parse_expr_text, Block, BlockKind, Document, Expr, ParseError, Value,
};
pub use report::{Finding, Report, Status};
