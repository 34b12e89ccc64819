//! Finite trace model of rely-guarantee concurrency.
//!
//! Programs denote prefix- and abort-closed sets of bounded traces over a
//! finite state space. The crate provides the command lattice, the sequential,
//! parallel and weak-conjunction operators, iteration, relational command
//! constructors, the rely quotient, a small expression language, and a law
//! checking harness driven by a catalogue of algebraic laws.

pub mod closure;
pub mod config;
pub mod error;
pub mod harness;
pub mod lang;
pub mod lattice;
pub mod operators;
pub mod quotient;
pub mod relcmds;
pub mod trace;
