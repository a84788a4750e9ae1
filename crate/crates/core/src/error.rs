use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An explicit ground list was asked for a term past its end.
    #[error("explicit ground has {len} terms, term {requested} requested")]
    BoundedPrefix { len: usize, requested: u64 },

    /// The working set would have to index past its hard cap.
    #[error("index {requested} exceeds the working-set cap of {cap}")]
    ResourceCap { requested: u64, cap: u64 },

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("unsupported ground: {0}")]
    UnsupportedGround(String),

    #[error("invalid ground: {0}")]
    InvalidGround(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("gap {gap} at position {index} is not in {{{base}, {double}}}", double = 2 * base)]
    TwoGapViolation { index: usize, gap: u64, base: u64 },

    #[error("no continued-fraction cycle found within {max_steps} steps")]
    CfBudget { max_steps: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid suite catalogue: {0}")]
    Catalogue(String),

    /// A failure inside a verification grid, tagged with its parameters.
    #[error("{check} at {point}: {source}")]
    AtPoint {
        check: String,
        point: String,
        source: Box<Error>,
    },
}
