//! Tabulated exponent functions ψ: ℤ → ℤ and the hypothesis check that
//! every ψ must pass before it is used in a sum.

use crate::error::{Error, Result};
use crate::qcore::char3;
use crate::theorems::pow3;
use crate::theorems::report::{ReportBuilder, Statement, VerificationReport};

/// Where a tabulated ψ came from. The code is recorded in report params.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsiKind {
    Zero = 0,
    PsiM = 1,
    Identity = 2,
    Custom = 3,
}

impl PsiKind {
    pub fn code(self) -> i64 {
        self as i64
    }

    pub fn from_code(code: i64) -> Option<PsiKind> {
        match code {
            0 => Some(PsiKind::Zero),
            1 => Some(PsiKind::PsiM),
            2 => Some(PsiKind::Identity),
            3 => Some(PsiKind::Custom),
            _ => None,
        }
    }
}

/// ψ tabulated on the window `[-3^a·m, 2·3^a·m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiSpec {
    a: u32,
    m: u64,
    kind: PsiKind,
    lo: i64,
    values: Vec<i64>,
}

impl PsiSpec {
    /// Tabulates `f` over the window.
    pub fn tabulate(
        a: u32,
        m: u64,
        kind: PsiKind,
        mut f: impl FnMut(i64) -> Result<i64>,
    ) -> Result<Self> {
        let (lo, hi) = window(a, m)?;
        let values = (lo..=hi).map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(PsiSpec {
            a,
            m,
            kind,
            lo,
            values,
        })
    }

    /// `values[i]` is ψ at `-3^a·m + i`.
    pub fn from_table(a: u32, m: u64, values: Vec<i64>) -> Result<Self> {
        let (lo, hi) = window(a, m)?;
        if values.len() as i64 != hi - lo + 1 {
            return Err(Error::InvalidArgument(format!(
                "psi table needs {} values, got {}",
                hi - lo + 1,
                values.len()
            )));
        }
        Ok(PsiSpec {
            a,
            m,
            kind: PsiKind::Custom,
            lo,
            values,
        })
    }

    pub fn zero(a: u32, m: u64) -> Result<Self> {
        Self::tabulate(a, m, PsiKind::Zero, |_| Ok(0))
    }

    pub fn identity(a: u32, m: u64) -> Result<Self> {
        Self::tabulate(a, m, PsiKind::Identity, Ok)
    }

    pub fn psi_m(a: u32, m: u64) -> Result<Self> {
        Self::tabulate(a, m, PsiKind::PsiM, |k| psi_m(a, m, k))
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn kind(&self) -> PsiKind {
        self.kind
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.lo + self.values.len() as i64 - 1)
    }

    pub fn get(&self, k: i64) -> Option<i64> {
        let idx = k.checked_sub(self.lo)?;
        usize::try_from(idx)
            .ok()
            .and_then(|i| self.values.get(i).copied())
    }

    pub(crate) fn at(&self, k: i64) -> Result<i64> {
        self.get(k).ok_or_else(|| {
            let (lo, hi) = self.window();
            Error::InvalidArgument(format!("psi window [{lo}, {hi}] does not cover k={k}"))
        })
    }

    /// First `(k, j)` breaking a hypothesis: `j = 0` for the symmetry
    /// `ψ(k) ≡ ψ(-k) (mod 3^a)`, `j >= 1` for `ψ(k + 3^j) ≡ ψ(k) (mod 3^j)`.
    pub fn first_violation(&self) -> Option<(i64, u32)> {
        let (lo, hi) = self.window();
        let full = 3i64.pow(self.a);
        for k in lo..=hi {
            let v = self.values[(k - lo) as usize];
            if let Some(w) = self.get(-k) {
                if (v - w).rem_euclid(full) != 0 {
                    return Some((k, 0));
                }
            }
            for j in 1..=self.a {
                let step = 3i64.pow(j);
                if let Some(w) = self.get(k + step) {
                    if (w - v).rem_euclid(step) != 0 {
                        return Some((k, j));
                    }
                }
            }
        }
        None
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        match self.first_violation() {
            None => Ok(()),
            Some((k, j)) => Err(Error::PsiHypothesisViolated { k, j }),
        }
    }
}

fn window(a: u32, m: u64) -> Result<(i64, i64)> {
    if a < 1 || m < 1 {
        return Err(Error::InvalidArgument(
            "psi window needs a >= 1 and m >= 1".into(),
        ));
    }
    let n = pow3(a)?
        .checked_mul(m)
        .and_then(|n| i64::try_from(n).ok())
        .filter(|n| n.checked_mul(2).is_some())
        .ok_or_else(|| Error::InvalidArgument("psi window too large".into()))?;
    Ok((-n, 2 * n))
}

/// Checks both hypothesis families over the tabulated window.
pub fn psi_check(psi: &PsiSpec) -> VerificationReport {
    let builder = ReportBuilder::new(Statement::PsiCheck)
        .param("a", psi.a)
        .param("m", psi.m)
        .param("psi", psi.kind.code());
    match psi.first_violation() {
        None => builder.finish(true, None),
        Some((k, j)) => builder.finish(false, Some(format!("{k},{j}"))),
    }
}

/// `ψ_m(k) = (2x² - x·(x/3) - 1)/3` with `x = 3^a·m - k`.
///
/// For `3 | x` that numerator is not divisible by 3; there the constant
/// `1` becomes `(x/3)² = 0`. Those `k` have `(k/3) = 0`, so the value never
/// reaches a sum, and the extension keeps both ψ hypotheses.
pub fn psi_m(a: u32, m: u64, k: i64) -> Result<i64> {
    let n = i128::from(pow3(a)?) * i128::from(m);
    let x = n - i128::from(k);
    let chi = i128::from(char3((x % 3) as i64).value());
    let num = 2 * x * x - x * chi - chi * chi;
    if num % 3 != 0 {
        return Err(Error::InternalError(format!(
            "psi_m numerator {num} not divisible by 3 (a={a}, m={m}, k={k})"
        )));
    }
    i64::try_from(num / 3).map_err(|_| Error::InvalidArgument("psi_m value overflows i64".into()))
}

/// `Ψ_a(k) = (ψ(3^a - k) - ψ(k))/3^a + (3^a - 1)/2 - k` for `1 <= k < 3^a`.
pub fn psi_cap(psi: &PsiSpec, k: i64) -> Result<i64> {
    let full = pow3(psi.a)? as i64;
    if k < 1 || k >= full {
        return Err(Error::InvalidArgument(format!(
            "psi_cap needs 1 <= k < 3^a = {full}, got {k}"
        )));
    }
    let diff = psi.at(full - k)? - psi.at(k)?;
    if diff % full != 0 {
        return Err(Error::InternalError(format!(
            "psi(3^a - k) - psi(k) = {diff} not divisible by 3^a at k={k}"
        )));
    }
    Ok(diff / full + (full - 1) / 2 - k)
}
