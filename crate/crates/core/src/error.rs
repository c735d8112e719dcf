use thiserror::Error;

/// Errors produced by the group operations and the expression parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid window: {0}")]
    InvalidWindow(String),

    #[error("generator s{letter} does not exist in rank {n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("exponent {e} of tau{k} is outside [-{k}, {k})")]
    ExponentOutOfRange { k: usize, e: i32 },

    #[error("exponent {e} of t{k} is outside [0, {k})")]
    SnExponentOutOfRange { k: usize, e: i32 },

    #[error("index {k} is outside 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },

    #[error("element is not in the parabolic subgroup generated by s1..s(n-1)")]
    NotInSdot,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("rank {n} exceeds the limit {max} for this operation")]
    RankTooLarge { n: usize, max: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
