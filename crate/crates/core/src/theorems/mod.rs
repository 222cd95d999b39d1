//! One check per statement. Each builds its objects from [`crate::qcore`]
//! and [`crate::modring`], decides the statement exactly, and returns a
//! [`VerificationReport`].

mod integer;
mod psi;
mod qseries;
mod report;

pub use integer::{
    is_prime, r_at_one, verify_lemma31, verify_lemma31_sweep, verify_ssz12, verify_ssz_quotient,
    verify_ssz_quotient_sweep, verify_sun_tauraso, R_AT_ONE_CROSSCHECK_MAX, SUN_TAURASO_BOUND,
};
pub use psi::{psi_cap, psi_check, psi_m, PsiKind, PsiSpec};
pub use qseries::Verifier;
pub use report::{Control, Statement, VerificationReport};

use crate::error::{Error, Result};

/// `3^a` as `u64`.
pub fn pow3(a: u32) -> Result<u64> {
    3u64.checked_pow(a)
        .ok_or_else(|| Error::InvalidArgument(format!("3^{a} overflows")))
}

fn require_positive(name: &str, v: u64) -> Result<()> {
    if v < 1 {
        return Err(Error::InvalidArgument(format!(
            "{name} must be >= 1, got {v}"
        )));
    }
    Ok(())
}
