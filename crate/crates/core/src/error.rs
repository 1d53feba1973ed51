use thiserror::Error;

/// Errors raised while building or analysing graded rings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid coefficient ring: {0}")]
    InvalidCoeffRing(String),
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("product of basis elements {i} and {j} is not homogeneous of the expected degree")]
    HomogeneityViolation { i: usize, j: usize },
    #[error("multiplication is not associative on basis triple ({i}, {j}, {k})")]
    AssociativityViolation { i: usize, j: usize, k: usize },
    #[error("structure constant for ({i}, {j}) at basis {k} is incompatible with the additive orders")]
    TorsionViolation { i: usize, j: usize, k: usize },
    #[error("identity violation: {0}")]
    IdentityViolation(String),

    #[error("module action violates the grading on ring basis {ring} and module basis {module}")]
    GradingViolation { ring: usize, module: usize },
    #[error("module action is not associative on ring basis ({i}, {j}) and module basis {m}")]
    ActionAssociativityViolation { i: usize, j: usize, m: usize },
    #[error("the identity does not act trivially on module basis {0}")]
    IdentityActionViolation(usize),

    #[error("closure exceeded the cap of {limit} elements")]
    CapExceeded { limit: usize },

    #[error("a product of epsilon idempotents is not idempotent: {0}")]
    NonIdempotentProduct(String),
    #[error("minimality cross-check failed for {0}")]
    MinimalityContradiction(String),
    #[error("element is not central in the principal component: {0}")]
    NotCentralInR(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
