use thiserror::Error;

use crate::grassmannian::GridPoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Grassmannian shape: d={d} must satisfy 0 <= d <= n with n >= 1 (n={n})")]
    InvalidShape { n: usize, d: usize },

    #[error("coset representative has {got} entries, expected d={expected}")]
    WrongLength { expected: usize, got: usize },

    #[error("coset entry {value} is outside [1, {n}]")]
    EntryOutOfRange { value: usize, n: usize },

    #[error("coset entries must be strictly increasing ({prev} is followed by {next})")]
    NotIncreasing { prev: usize, next: usize },

    #[error("coset representatives belong to different Grassmannians")]
    ShapeMismatch,

    #[error("tau is not below w in the Bruhat order, so the point does not lie on the Schubert variety")]
    NotOnVariety,

    #[error("reflection ({x}, {y}) lies outside 1 <= x <= {d} < y <= {n}")]
    ReflectionOutOfRange { x: i64, y: i64, d: usize, n: usize },

    #[error("border from {from} does not reach {to}")]
    BorderUnreachable { from: GridPoint, to: GridPoint },

    #[error("multiset violates the chain condition: {0}")]
    ChainCondition(String),

    #[error("reflection set does not satisfy the Bruhat chain property")]
    NotS1,

    #[error("inconsistent instance: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
