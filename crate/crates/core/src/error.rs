use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid integer {token:?} at position {position}")]
    Parse { position: usize, token: String },

    #[error("sequence must contain at least one entry")]
    EmptySequence,

    #[error("entries must be non-increasing (position {position})")]
    NotNonIncreasing { position: usize },

    #[error("degree {degree} at position {position} exceeds n-1 = {max}")]
    DegreeOutOfRange {
        position: usize,
        degree: usize,
        max: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("label {label} out of range 1..={n}")]
    IndexOutOfRange { label: usize, n: usize },

    #[error("label {label} given more than once")]
    DuplicateIndex { label: usize },

    #[error("vertex {label} needs {needed} other entries but only {available} exist")]
    InsufficientEntries {
        label: usize,
        needed: usize,
        available: usize,
    },

    #[error("sequence is not graphic")]
    NotGraphic,

    #[error("minimum degree is zero")]
    MinDegreeZero,

    #[error("sequences are not comparable under majorization")]
    NotComparable,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("invalid 2-switch: {0}")]
    InvalidSwitch(String),

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("n too large: {n} exceeds the maximum of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("vertex subset is empty")]
    EmptySubset,

    #[error("sampler reached a dead end at vertex {vertex}")]
    SamplerStuck { vertex: usize },

    #[error("malformed document: {0}")]
    Malformed(String),
}
