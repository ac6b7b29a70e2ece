use thiserror::Error;

/// Errors raised by the algebraic and combinatorial engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation is undefined on the trivial ideal {0}")]
    TrivialIdeal(&'static str),

    #[error("vector {a:?} is not bounded by {g:?}")]
    NotBounded { a: Vec<u32>, g: Vec<u32> },

    #[error("{what}: {found} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        found: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("ideal is not squarefree: generator {0}")]
    NotSquarefree(String),

    #[error("ideal is not in standard form: generator {0} lies in the parameter ideal")]
    NotStandardForm(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("generator order is not a permutation of the minimal generators: {0}")]
    InvalidOrder(String),

    #[error("malformed shedding tree: {0}")]
    MalformedTree(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid field characteristic {0}: must be 0 or a prime")]
    Characteristic(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
