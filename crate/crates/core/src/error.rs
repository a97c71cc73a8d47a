use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not a homomorphism: {0}")]
    NotWellDefined(String),

    #[error("invalid invariant factors: {0}")]
    InvalidGroup(String),

    #[error("unsupported free rank {rank}: the automorphism group of Z^{rank} is infinite")]
    UnsupportedRank { rank: usize },

    #[error("budget exceeded while enumerating {what}: {needed} candidates > budget {budget}")]
    BudgetExceeded {
        what: String,
        needed: String,
        budget: u64,
    },

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("γ does not preserve the image of b6, no induced map on coker b6")]
    NotInducible,

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("not a chain complex: {0}")]
    NotAComplex(String),
}
