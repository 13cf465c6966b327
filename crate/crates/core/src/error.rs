use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    InvalidPerm(String),

    #[error("group closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("automorphism search exceeded its node budget of {budget}")]
    SearchBudgetExceeded { budget: u64 },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("group is not transitive on its domain")]
    NotTransitive,

    #[error("partition is not invariant under the group")]
    NotInvariant,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("generator is not an automorphism of the graph")]
    NotAutomorphism,

    #[error("subgroup is not regular on the vertex set")]
    NotRegular,

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("unknown graph name: {0}")]
    UnknownGraph(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("degenerate construction: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
