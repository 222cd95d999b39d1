use thiserror::Error;

use crate::polyring::IntPoly;

/// Errors raised by the kernel and the theorem checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor is not monic (leading coefficient {lead})")]
    NonMonicDivisor { lead: String },

    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,

    /// The nonzero remainder is kept so callers can report it as a witness.
    #[error("inexact division, remainder {}", .rem.to_canonical())]
    InexactDivision { rem: IntPoly },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("rational {0} is not 3-integral")]
    NotThreeIntegral(String),

    #[error("psi hypothesis violated at k={k} (j={j})")]
    PsiHypothesisViolated { k: i64, j: u32 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("internal inconsistency: {0}")]
    InternalError(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
