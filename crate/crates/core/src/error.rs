use crate::complex::Simplex;

/// Errors raised by the library.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("face {0} is not a face of the complex")]
    UnknownFace(Simplex),
    #[error("stellar subdivision at a vertex ({0}) is not allowed")]
    DegenerateSubdivision(Simplex),
    #[error("invalid tile on facet {0}: {1}")]
    InvalidTile(Simplex, String),
    #[error("tile on {0} admits no split rewrite at {1}")]
    SplitNotApplicable(Simplex, Simplex),
    #[error("nothing to do: {0}")]
    NothingToDo(String),
    #[error("target is not pure-dimensional")]
    NotPure,
    #[error("complex is not a strongly connected closed pseudo-manifold")]
    NotPseudomanifold,
    #[error("complex is empty")]
    EmptyComplex,
    #[error("unsupported generator {0:?}")]
    UnsupportedGenerator(String),
    #[error("search guardrail exceeded: {0}")]
    Guardrail(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
