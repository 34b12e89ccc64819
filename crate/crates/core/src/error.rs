use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("operands belong to different model configurations: {0} vs {1}")]
    ConfigMismatch(String, String),
    #[error("capacity exceeded: {what} would need {needed} entries (ceiling {ceiling})")]
    Capacity {
        what: String,
        needed: u64,
        ceiling: u64,
    },
    #[error("fixed-point iteration exceeded the lattice height bound of {bound} steps; the transformer is not monotone")]
    MonotonicityViolation { bound: usize },
    #[error("parse error at offset {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
    #[error("unbound metavariable `{0}`")]
    UnboundVar(String),
    #[error("metavariable `{0}` is bound to a {1} but used as a {2}")]
    IllSorted(String, String, String),
    #[error("expression has {0} holes, expected exactly one")]
    HoleCount(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, ModelError>;
