use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed domain data: loops, duplicate edges, overlapping parts,
    /// out-of-range vertices, parameters that break a construction's
    /// divisibility requirements.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation was called outside its stated domain (empty edge list,
    /// out-of-range window, r = 0, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// No construction pipeline applies to these parameters.
    #[error("no construction covers n={n}, r={r}, cyclic={cyclic}: {reason}")]
    Uncovered {
        n: usize,
        r: usize,
        cyclic: bool,
        reason: String,
    },

    /// A concatenation proposition's junction hypothesis failed when it was
    /// machine-checked before assembly.
    #[error(
        "junction hypothesis failed at part {index} (stride {stride}): required {required}, found {found}"
    )]
    HypothesisViolation {
        index: usize,
        stride: usize,
        required: usize,
        found: usize,
    },

    /// A state that the supporting counting argument rules out; reaching it
    /// means the implementation (not the input) is wrong.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
