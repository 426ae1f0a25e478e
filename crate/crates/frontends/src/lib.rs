//! Parsers and pretty-printers for `.lam`, `.fol` and `.flow` files.
//!
//! All three formats take `#` line comments. Parsers stop at the first
//! error, reported with a span.

mod error;
mod flow;
mod fol;
mod lam;
mod lex;

pub use error::{ParseError, SourceSpan};
pub use lam::{parse_lambda, parse_lambda_file, pretty_lambda};
pub use fol::{
    build_fol, parse_fol, parse_formula, parse_term, pretty_fol, pretty_formula, pretty_statement, pretty_term,
    pretty_value, DomainDecl, FolBuildError, FolDocument, FolQuery, FolSetup, FolStatement, DEFAULT_BOUND,
};
pub use flow::{as_flowchart, parse_flow, pretty_bool, pretty_expr, pretty_flow, pretty_stmt};
