use thiserror::Error;

/// Reasons a sequence or gap set fails its structural invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("expected {expected} entries (one per unit of genus), found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("first entry must be 0, found {found}")]
    FirstNotZero { found: u32 },
    #[error("entries must be strictly increasing (position {index})")]
    NotStrictlyIncreasing { index: usize },
    #[error("entries must be nondecreasing (position {index})")]
    NotNondecreasing { index: usize },
    #[error("entry {value} exceeds the bound {bound}")]
    AboveBound { value: u32, bound: u32 },
    #[error("gap set of positive genus must contain 1")]
    MissingGapOne,
    #[error("gaps must be positive")]
    ZeroGap,
    #[error("gap {0} listed twice")]
    DuplicateGap(u32),
    #[error("genus {0} is too large")]
    GenusTooLarge(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("stored table disagrees with recomputation: {0}")]
    DataIntegrity(String),
    #[error("malformed table data at record {record}: {reason}")]
    TableParse { record: usize, reason: String },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// True for violated internal checks, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
