use thiserror::Error;

use crate::algebra::{Shape, Uniserial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid algebra descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("invalid Kupisch series {series:?}: {reason}")]
    InvalidKupisch { series: Vec<usize>, reason: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0} is not a module over this algebra")]
    NotAModule(Uniserial),

    #[error("{op} is not available for {shape} algebras")]
    UnsupportedShape { op: &'static str, shape: Shape },

    #[error("{op} requires a hereditary algebra")]
    NotHereditary { op: &'static str },

    #[error("cannot parse module literal {literal:?}: {reason}")]
    ParseModule { literal: String, reason: String },

    #[error("morphism mismatch: {0}")]
    MorphismMismatch(String),

    #[error("{0}")]
    OutOfRange(String),

    #[error("refusing: {0}")]
    Refused(String),

    #[error("oracle failure: {0}")]
    Oracle(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
