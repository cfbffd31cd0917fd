use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("parts {0:?} do not form a partition (must be positive and weakly decreasing)")]
    NotAPartition(Vec<u32>),

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: String, inner: String },

    #[error("part sum {sum} exceeds the configured limit {limit}")]
    SumLimit { sum: u64, limit: u64 },

    #[error("dominance order compares sequences of equal sum, got {left} and {right}")]
    SumMismatch { left: i64, right: i64 },

    #[error("operation is undefined on the empty partition")]
    EmptyPartition,

    #[error("shape has {cells} cells but content has size {content}")]
    SizeMismatch { cells: usize, content: usize },

    #[error("expected {expected} partitions, got {got}")]
    BadArity { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    BadInput(String),

    #[error("sequences are not interleaved as a1 >= b1 > a2 >= b2 > ...")]
    BadInterleaving,

    #[error("exchanged sequences have repeated entries; the inversion identity does not apply")]
    NotDistinct,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("bound {bound} exceeds the configured maximum {max}")]
    BoundExceeded { bound: usize, max: usize },

    #[error("rank {r} outside 1..={max}")]
    BadRank { r: usize, max: usize },

    #[error("integer overflow in Schur coefficient arithmetic")]
    Overflow,

    #[error("posets have different sizes: {left} and {right}")]
    PosetSizeMismatch { left: usize, right: usize },

    #[error("order relation is not antisymmetric: {0}")]
    NotAntisymmetric(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
