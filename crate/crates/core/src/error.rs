//! Library-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible twisted type: {0}")]
    InadmissibleType(String),

    #[error("node {node} is not a valid index for {context}")]
    NodeOutOfRange { node: usize, context: String },

    #[error("operands belong to different twisted types")]
    TypeMismatch,

    #[error("unsupported inverse: {0}")]
    UnsupportedInverse(String),

    #[error("parameter off the supported grid: {0}")]
    OffGrid(String),

    #[error("divisibility failure at node {node}: {divisor} does not divide {value}")]
    Divisibility { node: usize, value: i64, divisor: i64 },

    #[error("not factorable over the requested dictionary: {detail} (component {component})")]
    NotFactorable { component: usize, detail: String },

    #[error("syntax error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("multiplicity overflow: {0}")]
    Overflow(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
