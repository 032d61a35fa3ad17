use thiserror::Error;

use crate::schedule::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{n} vertices requested, at most {max} supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex set is not a vertex cover")]
    NotACover,

    #[error("vertex cover of size {size} is not minimum (beta = {beta})")]
    NotMinimumCover { size: usize, beta: usize },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("budget exceeded in {what} after {expanded} steps")]
    BudgetExceeded { what: &'static str, expanded: u64 },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("schedule document: {0}")]
    ScheduleFormat(String),

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("constructed schedule failed verification: {0}")]
    InternalVerification(Violation),

    #[error("no feasible schedule at capacity {capacity} although beta = {beta}")]
    BoundViolated { capacity: usize, beta: usize },
}

impl Error {
    /// True for errors caused by malformed textual input.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Graph6(_)
                | Error::Parse { .. }
                | Error::ScheduleFormat(_)
                | Error::UnknownFamily(_)
                | Error::InvalidParameter(_)
                | Error::SelfLoop(_)
                | Error::VertexOutOfRange { .. }
                | Error::TooManyVertices { .. }
        )
    }
}
