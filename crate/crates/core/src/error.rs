use serde::Serialize;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", rename_all = "PascalCase")]
pub enum Error {
    #[error("{q} is not a prime power")]
    NotPrimePower { q: u32 },
    #[error("field of order {q} exceeds the supported cap {cap}")]
    Unsupported { q: u32, cap: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("Jacobi identity fails on basis triple ({}, {}, {})", triple[0], triple[1], triple[2])]
    JacobiViolation { triple: [String; 3] },
    #[error("bracket [{left}, {right}] specified more than once")]
    DuplicateBracket { left: String, right: String },
    #[error("unknown basis name {name:?}")]
    UnknownBasisName { name: String },
    #[error("duplicate basis name {name:?}")]
    DuplicateBasisName { name: String },
    #[error("bracket [{name}, {name}] must be zero")]
    SelfBracketNonzero { name: String },
    #[error("coefficient {value} of {name:?} is not an element code of F_{q}")]
    InvalidCoefficient { name: String, value: u32, q: u32 },
    #[error("invalid algebra spec: {reason}")]
    InvalidSpec { reason: String },
    #[error("{what} needs {needed}, above the cap of {cap}")]
    CapExceeded { what: String, needed: u64, cap: u64 },
    #[error("the algebra is abelian, so its non-commuting graph is the null graph")]
    AbelianAlgebra,
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    BadVertex { vertex: usize, order: usize },
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("unknown statement id {id:?}")]
    UnknownStatement { id: String },
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, needed: u64, cap: u64) -> Self {
        Error::CapExceeded {
            what: what.into(),
            needed,
            cap,
        }
    }

    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrimePower { .. } => "NotPrimePower",
            Error::Unsupported { .. } => "Unsupported",
            Error::DivisionByZero => "DivisionByZero",
            Error::JacobiViolation { .. } => "JacobiViolation",
            Error::DuplicateBracket { .. } => "DuplicateBracket",
            Error::UnknownBasisName { .. } => "UnknownBasisName",
            Error::DuplicateBasisName { .. } => "DuplicateBasisName",
            Error::SelfBracketNonzero { .. } => "SelfBracketNonzero",
            Error::InvalidCoefficient { .. } => "InvalidCoefficient",
            Error::InvalidSpec { .. } => "InvalidSpec",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::AbelianAlgebra => "AbelianAlgebra",
            Error::BadVertex { .. } => "BadVertex",
            Error::EmptyGraph => "EmptyGraph",
            Error::UnknownStatement { .. } => "UnknownStatement",
        }
    }
}
