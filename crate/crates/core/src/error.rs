use crate::rootsys::{LieType, Root};
use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is too small for type {kind:?}")]
    RankTooSmall { kind: LieType, rank: u32 },
    #[error("root {root} does not belong to the positive system of {kind:?} rank {rank}")]
    RootNotInSystem { kind: LieType, rank: u32, root: Root },
    #[error("{what} index {index} out of range (must be between 1 and {max})")]
    IndexOutOfRange {
        what: &'static str,
        index: u32,
        max: u32,
    },
    #[error("generator index {index} must be {expected} here")]
    ParityError { index: u32, expected: &'static str },
    #[error("operands belong to different root systems")]
    MixedSystems,
    #[error("operation is only defined for types {expected}")]
    TypeNotSupported { expected: &'static str },
    #[error("matrix commutator leaves a nonzero residual after expansion in root vectors")]
    ResidualNonZero,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("budget exceeded for {what} (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: u32 },
    #[error("scalar c_{k} is zero: the ideal is not centrally generated")]
    ZeroScalar { k: usize },
    #[error("Kostant form must be nonzero on cascade position {k}")]
    ZeroOnCascade { k: usize },
    #[error("product-formula exponent for cascade root {beta} is not a nonnegative integer")]
    NonIntegerExponent { beta: Root },
    #[error("invalid order spec: {0}")]
    InvalidOrderSpec(String),
    #[error("order has a minimal positive element with flipped sign (index {index}), not allowed for type D")]
    MinimalPositiveViolation { index: u32 },
    #[error("minor data for {root} has duplicate row or column indices")]
    MalformedLevel { root: Root },
    #[error("cascade root {root} not allowed here")]
    CascadeRootNotAllowed { root: Root },
    #[error("minor of the exponential is identically zero")]
    ZeroMinor,
    #[error("linear form must be supported on the cascade with nonzero entries")]
    BadCascadeForm,
}

pub type Result<T> = std::result::Result<T, Error>;
