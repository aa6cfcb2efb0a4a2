use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),
    #[error("operation requires type {expected}, got {got}")]
    WrongType { expected: &'static str, got: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index {index} out of range for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("Hurwitz orbit exceeded the cap of {0} tuples")]
    CapExceeded(usize),
    #[error("element is not c-sortable")]
    NotSortable,
    #[error("element is not below the Coxeter element in absolute order")]
    NotBelowCoxeter,
    #[error("no sortable preimage found (Read should be bijective)")]
    NotFound,
    #[error("atom windows disagree for reflection {0}")]
    AtomMismatch(usize),
    #[error("not a standard Coxeter word: {0}")]
    NotCoxeterWord(String),
    #[error("{0}")]
    Normalization(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
