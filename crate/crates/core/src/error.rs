use thiserror::Error;

use crate::twist::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator x{generator} is out of range for rank {rank}")]
    GeneratorOutOfRange { generator: u32, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid twist tree: {}", format_violations(.0))]
    InvalidTree(Vec<Violation>),

    #[error("framing has {found} entries but the tree has {expected} chords")]
    FramingLength { expected: usize, found: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("resource limit exceeded: {what} is {requested}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
