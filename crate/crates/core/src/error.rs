use thiserror::Error;

/// Errors raised by group construction and analysis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{cap_name} exceeded: {size} > {cap}")]
    CapExceeded {
        cap_name: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("action is not by automorphisms: {0}")]
    NotAnAutomorphism(String),
    #[error("action is inconsistent with the relations of the acting group: {0}")]
    InconsistentAction(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown element or handle: {0}")]
    UnknownElement(String),
    #[error("unknown recipe: {0}")]
    UnknownRecipe(String),
    #[error("malformed cayley-v1 document: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
