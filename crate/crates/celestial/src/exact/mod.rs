//! Exact scalar and polynomial arithmetic over ℚ, ℚ(i) and ℚ(i)(√m),
//! plus a parser and canonical printer for the expression syntax used by
//! the surface catalog.

mod element;
mod linalg;
mod map;
mod parse;
mod poly;

pub use element::{Domain, FieldElement};
pub use linalg::nullspace;
pub use map::RationalMap;
pub use parse::parse_expression;
pub use poly::{Mono, MultiPoly};

use thiserror::Error;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("sqrt({m}) is not allowed: m must be a squarefree integer >= 2")]
    BadRadicand { m: i64 },
    #[error("domain {found} too small: expression requires {required}")]
    DomainTooSmall { required: Domain, found: Domain },
    #[error("cannot mix sqrt({m1}) and sqrt({m2}) in one context")]
    MixedRadicals { m1: u64, m2: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable lists do not match: expected {expected:?}, got {got:?}")]
    VariableMismatch { expected: Vec<String>, got: Vec<String> },
    #[error("{0}")]
    Invalid(String),
}

pub type ExactResult<T> = Result<T, ExactError>;
