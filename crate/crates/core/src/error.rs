use thiserror::Error;

/// Errors raised across the library. The CLI maps `Parse` to exit code 2 and
/// every other variant to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("not a link diagram: {0}")]
    NotALinkDiagram(String),

    #[error("split closure: Alexander polynomial is 0")]
    SplitClosure,

    #[error("torsion undefined for split links")]
    TorsionUndefined,

    #[error("not a lens filling: ({p},{q}) are not coprime")]
    NotLensFilling { p: i64, q: i64 },

    #[error("missing peripheral data for component {0}")]
    MissingPeripheral(usize),

    #[error("plumbing presentation requires a tree")]
    NotATree,

    #[error("invalid coset table: {0}")]
    InvalidCosetTable(String),

    #[error("budget exhausted at index {index} after {nodes} search nodes")]
    BudgetExhausted { index: usize, nodes: u64 },
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
