//! Exact q-series kernel and congruence checker.
//!
//! Builds q-integers, Gaussian binomials and cyclotomic polynomials over
//! arbitrary-precision integers, and decides the congruences satisfied by the
//! central sums `Σ q^k [2k choose k]_q` modulo `[3^a]_q²` and `Φ_{3^a}(q)`,
//! together with their integer and 3-adic counterparts. Every check is exact.

#![forbid(unsafe_code)]

pub mod error;
pub mod modring;
pub mod polyring;
pub mod qcore;
pub mod suite;
pub mod theorems;

pub use error::{Error, Result};
pub use modring::{Modulus, Valuation};
pub use polyring::{BigRat, Degree, IntPoly};
pub use qcore::{Char3, CyclotomicCache};
pub use suite::{
    JsonRecord, Level, OutputFormat, SuiteConfig, SuiteEntry, SuiteOutcome, SuiteSummary,
};
pub use theorems::{Control, PsiKind, PsiSpec, Statement, VerificationReport, Verifier};
