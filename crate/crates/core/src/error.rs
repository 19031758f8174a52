use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("predicate arity {expected} does not match {got} factors")]
    ArityMismatch { expected: usize, got: usize },

    #[error("class ({r},{n}) is not a boundary class (seeds need r = 0 or n = 0)")]
    MixedClass { r: u32, n: u32 },

    #[error("class (0,0) is not allowed")]
    ZeroClass,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
