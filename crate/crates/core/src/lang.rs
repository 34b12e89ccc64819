//! A small textual language for command expressions: parser, printer and
//! evaluator. Used both by the CLI and as the template language for the law
//! catalogue.

pub mod ast;
pub mod eval;
pub mod parse;
pub mod print;

pub use ast::{Expr, PredLit, RelLit};
pub use eval::{eval, to_transformer, Binding, CommandTransformer, Value};
pub use parse::parse;
pub use print::print;
