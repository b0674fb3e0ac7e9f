use thiserror::Error;

use crate::logic::Diagnostic;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("not a separation: edge {u}-{v} joins L\\R to R\\L")]
    NotASeparation { u: usize, v: usize },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("enumeration cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("set is not a suffix of the digraph")]
    NotASuffix,
    #[error("flip `{0}` must be symmetric")]
    SymmetryRequired(String),
    #[error("flip `{0}` realizes an asymmetric relation but was used as symmetric")]
    AsymmetricSpecUsedAsSymmetric(String),
    #[error("expected {expected} parameters, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable `{0}` has no value")]
    UnboundVariable(String),
    #[error("{0}")]
    Formula(Diagnostic),
}

impl From<Diagnostic> for Error {
    fn from(d: Diagnostic) -> Self {
        Error::Formula(d)
    }
}
