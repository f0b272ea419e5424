use thiserror::Error;

/// Errors reported by the library.
///
/// Verdicts of axiom checks are *not* errors; they are carried by
/// [`crate::algebra::CheckReport`].  Errors signal misuse (mismatched sizes,
/// unmet preconditions, out-of-range input) or malformed input files.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base size mismatch: {left} vs {right}")]
    BaseSizeMismatch { left: usize, right: usize },

    #[error("point {point} out of range for base size {base_size}")]
    PointOutOfRange { point: usize, base_size: usize },

    #[error("base set must be non-empty")]
    EmptyBase,

    #[error("generator list must be non-empty (the empty map set is excluded by convention)")]
    EmptyGenerators,

    #[error("element index {index} out of range for system of size {size}")]
    ElementOutOfRange { index: usize, size: usize },

    #[error("relation/table size {relation} does not match system size {system}")]
    RelationSizeMismatch { relation: usize, system: usize },

    #[error("{what} = {value} exceeds the supported maximum {max}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("map set is not closed under {op}: missing result for pair ({i}, {j})")]
    NotClosed {
        op: &'static str,
        i: usize,
        j: usize,
    },

    #[error("meet tables require a meet-closed map set (with_meet = true)")]
    MeetRequired,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("system has no chi relation (required by this check)")]
    MissingChi,

    #[error("assignment length {actual} does not match system size {expected}")]
    AssignmentLength { expected: usize, actual: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
