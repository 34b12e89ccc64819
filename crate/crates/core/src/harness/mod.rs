//! Law-checking harness: a catalogue of algebraic laws, instantiation pools,
//! a checking engine, and deterministic reporting.

pub mod catalogue;
mod check;
pub mod gen;
pub mod report;
mod special;

pub use catalogue::{law_catalogue, negative_catalogue, LawKind, LawSpec};
pub use check::{check_law, negative_suite, run_suite};
pub use gen::{build_pool, GenConfig, Mode, Pool};
pub use report::{Counterexample, LawReport, Report, Status};
