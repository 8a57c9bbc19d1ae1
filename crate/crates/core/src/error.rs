use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: parts must be positive and weakly decreasing")]
    InvalidPartition,
    #[error("cell not in shape")]
    CellNotInShape,
    #[error("part exceeds k")]
    PartExceedsK,
    #[error("not a core")]
    NotACore,
    #[error("Pieri degree exceeds k")]
    PieriDegreeExceedsK,
    #[error("arithmetic overflow")]
    Overflow,
    /// A mathematical invariant the construction relies on failed to hold.
    /// Seeing this means a bug, not bad input.
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
    /// A caller-visible precondition was not met.
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::InvariantViolated(msg.into())
}

/// Checked i64 addition, mapping wraparound to [`Error::Overflow`].
pub(crate) fn add_i64(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Checked i64 multiplication, mapping wraparound to [`Error::Overflow`].
pub(crate) fn mul_i64(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}
