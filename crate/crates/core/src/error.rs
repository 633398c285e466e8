use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: char, rank: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("weight {0} is not dominant integral for this group")]
    NotDominant(String),

    #[error("weight {0} is not genuine (expected half-odd-integer coordinates)")]
    NotGenuine(String),

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    CapExceeded { dim: u64, cap: u64 },

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("root {0} is not a positive root of this system")]
    RootNotPositive(String),

    #[error("real part of nu lies outside the closed Langlands chamber")]
    OutsideChamber,

    #[error("real part of nu must vanish exactly for the unitary principal series")]
    NonzeroRealPart,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("gamma argument {0} is within 1e-8 of a pole")]
    PoleProximity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
