use num_bigint::BigInt;

use super::psi::PsiSpec;
use super::report::{Control, ReportBuilder, Statement, VerificationReport};
use super::{pow3, require_positive};
use crate::error::{Error, Result};
use crate::modring::{coprime_to_cyclotomic, divide_checked, Modulus};
use crate::polyring::IntPoly;
use crate::qcore::{
    binomial, central_qbinom_sum, central_qbinom_sum_both, char3, q_binom, q_binom_row,
    CyclotomicCache,
};
use crate::theorems::psi::psi_m;

/// Runs the polynomial checks, sharing one cyclotomic cache.
///
/// `Verifier` is `Sync`; the suite runner shares one instance across workers.
#[derive(Debug, Default)]
pub struct Verifier {
    cache: CyclotomicCache,
}

/// Signed `±q^e·p` contributions, shifted by a common power of `q` so every
/// exponent is nonnegative.
struct ShiftedSum<'a> {
    terms: Vec<(i64, i64, &'a IntPoly)>,
}

impl<'a> ShiftedSum<'a> {
    fn new() -> Self {
        ShiftedSum { terms: Vec::new() }
    }

    fn push(&mut self, sign: i64, exp: i64, p: &'a IntPoly) {
        if sign != 0 {
            self.terms.push((sign, exp, p));
        }
    }

    /// Returns `(q^s · Σ, s)` with `s = max(0, -min exponent)`.
    fn collect(&self) -> (IntPoly, usize) {
        let min = self.terms.iter().map(|t| t.1).min().unwrap_or(0);
        let shift = (-min).max(0);
        let mut acc = IntPoly::zero();
        for &(sign, exp, p) in &self.terms {
            acc.add_scaled_shifted(p, &BigInt::from(sign), (exp + shift) as usize);
        }
        (acc, shift as usize)
    }
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache(&self) -> &CyclotomicCache {
        &self.cache
    }

    fn phi(&self, d: u64) -> Result<IntPoly> {
        self.cache.get(d)
    }

    /// `Σ_{k=0}^{3^a·m-1} q^k [2k choose k]_q ≡ 0 (mod [3^a]_q²)`.
    pub fn verify_eq13(&self, a: u32, m: u64) -> Result<VerificationReport> {
        self.eq13_variant(a, m, None)
    }

    /// Negative control: the same sum one term short.
    pub fn control_eq13_truncated(&self, a: u32, m: u64) -> Result<VerificationReport> {
        self.eq13_variant(a, m, Some(Control::TruncatedSum))
    }

    /// Negative control: the full sum against `[3^a]_q³`.
    pub fn control_eq13_inflated(&self, a: u32, m: u64) -> Result<VerificationReport> {
        self.eq13_variant(a, m, Some(Control::InflatedModulus))
    }

    fn eq13_variant(&self, a: u32, m: u64, control: Option<Control>) -> Result<VerificationReport> {
        require_positive("a", a.into())?;
        require_positive("m", m)?;
        let builder = ReportBuilder::new(Statement::Eq13)
            .param("a", a)
            .param("m", m)
            .control(control);
        let n = pow3(a)?
            .checked_mul(m)
            .ok_or_else(|| Error::InvalidArgument("3^a·m overflows".into()))?;
        let (terms, power) = match control {
            Some(Control::TruncatedSum) => (n - 1, 2),
            Some(Control::InflatedModulus) => (n, 3),
            _ => (n, 2),
        };
        let modulus = Modulus::three_power(a, power, &self.cache)?;
        let (full, reduced) = central_qbinom_sum_both(terms, modulus.poly())?;
        let (quot, rem) = divide_checked(&full, &modulus)?;
        if rem != reduced {
            return Err(Error::InternalError(
                "reduced accumulation disagrees with the remainder of the full sum".into(),
            ));
        }
        Ok(finish_division(builder, quot, rem))
    }

    /// `R(a,q)` with denominators cleared: returns `(D, D·R)` where
    /// `D = ∏ [k]_q²` over `1 <= k < 3^a`, `k ≡ 1 (mod 3)`.
    pub fn build_r_cleared(&self, a: u32) -> Result<(IntPoly, IntPoly)> {
        require_positive("a", a.into())?;
        let full = pow3(a)?;
        let ks: Vec<u64> = (1..full).filter(|k| k % 3 == 1).collect();
        let mut d = IntPoly::one();
        for &k in &ks {
            d = d.mul_repunit(k as usize).mul_repunit(k as usize);
        }
        let half = pow3(a - 1)? + 1;
        if half % 2 != 0 {
            return Err(Error::InternalError("(3^(a-1) + 1)/2 not integral".into()));
        }
        let half = (half / 2) as i64;
        let mut dr = IntPoly::zero();
        for &k in &ks {
            let ki = k as i64;
            if ((ki + 2) * (ki - 1)) % 6 != 0 || (ki - 1) % 3 != 0 {
                return Err(Error::InternalError(format!(
                    "R(a,q) exponent or coefficient not integral at k={k}"
                )));
            }
            let exp = ((ki + 2) * (ki - 1) / 6) as usize;
            let c = (ki - 1) / 3 - half;
            let cofactor = d
                .div_repunit_exact(k as usize)
                .and_then(|p| p.div_repunit_exact(k as usize))?;
            // 1 + c(1 - q^k) = (1 + c) - c q^k
            let mut bracket = IntPoly::constant(1 + c);
            bracket.add_scaled_shifted(&IntPoly::one(), &BigInt::from(-c), k as usize);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            dr.add_scaled_shifted(&(&cofactor * &bracket), &BigInt::from(sign), exp);
        }
        Ok((d, dr))
    }

    /// `(1/[3^a]_q²) Σ_{k<3^a} q^k [2k choose k]_q ≡ 2R(a,q) (mod Φ_{3^a})`,
    /// checked after multiplying through by `D`.
    pub fn verify_eq14(&self, a: u32) -> Result<VerificationReport> {
        self.eq14_variant(a, None)
    }

    /// Negative control: `R` replaced by `R + 1`.
    pub fn control_eq14_perturbed(&self, a: u32) -> Result<VerificationReport> {
        self.eq14_variant(a, Some(Control::PerturbedR))
    }

    fn eq14_variant(&self, a: u32, control: Option<Control>) -> Result<VerificationReport> {
        require_positive("a", a.into())?;
        let builder = ReportBuilder::new(Statement::Eq14)
            .param("a", a)
            .control(control);
        let (d, dr) = self.eq14_cleared(a)?;
        let dr = match control {
            Some(Control::PerturbedR) => &dr + &d,
            _ => dr,
        };
        let t = self.eq14_quotient(a)?;
        let diff = &(&d * &t) - &dr.scale(&BigInt::from(2));
        let phi = self.phi(pow3(a)?)?;
        let (quot, rem) = diff.divrem_monic(&phi)?;
        Ok(finish_division(builder, quot, rem))
    }

    /// `T = Σ_{k<3^a} q^k [2k choose k]_q / [3^a]_q²`; an inexact division
    /// here means the divisibility itself failed.
    pub fn eq14_quotient(&self, a: u32) -> Result<IntPoly> {
        let full = pow3(a)?;
        let sum = central_qbinom_sum(full, None)?;
        sum.exact_div(&IntPoly::repunit(full as usize).square())
    }

    /// `(D, D·R)` after asserting that `D` is coprime to `Φ_{3^a}`.
    pub fn eq14_cleared(&self, a: u32) -> Result<(IntPoly, IntPoly)> {
        let (d, dr) = self.build_r_cleared(a)?;
        if !coprime_to_cyclotomic(&d, pow3(a)?, &self.cache)? {
            return Err(Error::InternalError(
                "denominator D shares a factor with Φ_{3^a}".into(),
            ));
        }
        Ok((d, dr))
    }

    /// `Σ_{k=1}^{3^a·m-1} q^{ψ(k)} (k/3) [2·3^a·m choose k]_q ≡ 0 (mod [3^a]_q²)`.
    ///
    /// Negative ψ values are handled by multiplying the whole sum by a power
    /// of `q`, which is a unit modulo every `Φ_{3^j}`.
    pub fn verify_eq21(&self, a: u32, m: u64, psi: &PsiSpec) -> Result<VerificationReport> {
        require_positive("a", a.into())?;
        require_positive("m", m)?;
        if psi.a() != a {
            return Err(Error::InvalidArgument(format!(
                "psi tabulated for a={}, check asked for a={a}",
                psi.a()
            )));
        }
        psi.require_valid()?;
        let builder = ReportBuilder::new(Statement::Eq21)
            .param("a", a)
            .param("m", m)
            .param("psi", psi.kind().code());
        let (sum, _) = self.eq21_sum(a, m, psi)?;
        let modulus = Modulus::three_power(a, 2, &self.cache)?;
        let (quot, rem) = divide_checked(&sum, &modulus)?;
        Ok(finish_division(builder, quot, rem))
    }

    /// `q^s Σ_{k=1}^{N-1} q^{ψ(k)} (k/3) [2N choose k]_q` with `N = 3^a·m`,
    /// together with the shift `s`.
    pub fn eq21_sum(&self, a: u32, m: u64, psi: &PsiSpec) -> Result<(IntPoly, usize)> {
        let n = pow3(a)? * m;
        let row = q_binom_row(2 * n, n - 1);
        let mut sum = ShiftedSum::new();
        for k in 1..n {
            let chi = char3(k as i64).value();
            if chi != 0 {
                sum.push(chi, psi.at(k as i64)?, &row[k as usize]);
            }
        }
        Ok(sum.collect())
    }

    /// Both sides of
    /// `Σ_{k<N} q^k [2k choose k]_q = -Σ_{k=1}^{N-1} q^{ψ_m(k)} (k/3) [2N choose k]_q`,
    /// `N = 3^a·m`.
    pub fn identity33_sides(&self, a: u32, m: u64) -> Result<(IntPoly, IntPoly)> {
        require_positive("a", a.into())?;
        require_positive("m", m)?;
        let n = pow3(a)? * m;
        let lhs = central_qbinom_sum(n, None)?;
        let row = q_binom_row(2 * n, n - 1);
        let mut rhs = IntPoly::zero();
        for k in 1..n {
            let chi = char3(k as i64).value();
            if chi == 0 {
                continue;
            }
            let e = psi_m(a, m, k as i64)?;
            if e < 0 {
                return Err(Error::InternalError(format!(
                    "psi_m negative on the summation range at k={k}"
                )));
            }
            rhs.add_scaled_shifted(&row[k as usize], &BigInt::from(-chi), e as usize);
        }
        Ok((lhs, rhs))
    }

    pub fn verify_identity33(&self, a: u32, m: u64) -> Result<VerificationReport> {
        self.identity33_variant(a, m, None)
    }

    /// Negative control: the last term of the left side dropped.
    pub fn control_identity33_dropped(&self, a: u32, m: u64) -> Result<VerificationReport> {
        self.identity33_variant(a, m, Some(Control::DroppedTerm))
    }

    fn identity33_variant(
        &self,
        a: u32,
        m: u64,
        control: Option<Control>,
    ) -> Result<VerificationReport> {
        let builder = ReportBuilder::new(Statement::Id33)
            .param("a", a)
            .param("m", m)
            .control(control);
        let (mut lhs, rhs) = self.identity33_sides(a, m)?;
        if control == Some(Control::DroppedTerm) {
            let n = pow3(a)? * m;
            let last = q_binom(2 * (n - 1), n - 1).shift_mul((n - 1) as usize);
            lhs -= &last;
        }
        let diff = &lhs - &rhs;
        Ok(if diff.is_zero() {
            builder.finish(true, Some(lhs.to_canonical()))
        } else {
            builder.finish(false, Some(diff.to_canonical()))
        })
    }

    /// The ψ-weighted congruence modulo `Φ_{3^a}`:
    /// `L/(2[3^a]_q²) ≡ S`, checked as `Φ_{3^a} | q^s·(D·T - 2·D·S)` with
    /// `T = L/[3^a]_q²` and `D = ∏[k]_q²` clearing the denominators of `S`.
    pub fn verify_lemma32(&self, a: u32, psi: &PsiSpec) -> Result<VerificationReport> {
        require_positive("a", a.into())?;
        if psi.a() != a {
            return Err(Error::InvalidArgument(format!(
                "psi tabulated for a={}, check asked for a={a}",
                psi.a()
            )));
        }
        psi.require_valid()?;
        let builder = ReportBuilder::new(Statement::Lemma32)
            .param("a", a)
            .param("psi", psi.kind().code());
        let (lhs_t, lhs_shift) = self.lemma32_quotient(a, psi)?;
        let (d, ds, rhs_shift) = self.lemma32_cleared_rhs(a, psi)?;
        let left = (&d * &lhs_t).shift_mul(rhs_shift);
        let right = ds.scale(&BigInt::from(2)).shift_mul(lhs_shift);
        let diff = &left - &right;
        let phi = self.phi(pow3(a)?)?;
        let (quot, rem) = diff.divrem_monic(&phi)?;
        Ok(finish_division(builder, quot, rem))
    }

    /// `(q^s·L/[3^a]_q², s)` where `L = Σ_{k=1}^{3^a-1} q^{ψ(k)} (k/3) [2·3^a choose k]_q`.
    pub fn lemma32_quotient(&self, a: u32, psi: &PsiSpec) -> Result<(IntPoly, usize)> {
        let (l, shift) = self.eq21_sum(a, 1, psi)?;
        let full = pow3(a)? as usize;
        let t = l.exact_div(&IntPoly::repunit(full).square())?;
        Ok((t, shift))
    }

    /// `(D, q^s·D·S, s)` for the right side
    /// `S = Σ_{k ≡ 1 (3)} q^{ψ(k) - C(k,2)} (-1)^{k-1} (1 + Ψ_a(k)(1 - q^k)) / [k]_q²`.
    pub fn lemma32_cleared_rhs(&self, a: u32, psi: &PsiSpec) -> Result<(IntPoly, IntPoly, usize)> {
        let full = pow3(a)?;
        let (d, _) = self.eq14_cleared(a)?;
        let mut pieces = Vec::new();
        for k in (1..full).filter(|k| k % 3 == 1) {
            let ki = k as i64;
            let cap = super::psi::psi_cap(psi, ki)?;
            let exp = psi.at(ki)? - ki * (ki - 1) / 2;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let cofactor = d
                .div_repunit_exact(k as usize)
                .and_then(|p| p.div_repunit_exact(k as usize))?;
            let mut bracket = IntPoly::constant(1 + cap);
            bracket.add_scaled_shifted(&IntPoly::one(), &BigInt::from(-cap), k as usize);
            pieces.push((sign, exp, &cofactor * &bracket));
        }
        let mut sum = ShiftedSum::new();
        for (sign, exp, p) in &pieces {
            sum.push(*sign, *exp, p);
        }
        let (ds, shift) = sum.collect();
        Ok((d, ds, shift))
    }

    /// q-Lucas: `[x1·d+y1 choose x2·d+y2]_q ≡ C(x1,x2)·[y1 choose y2]_q (mod Φ_d)`.
    pub fn q_lucas_check(
        &self,
        d: u64,
        x1: u64,
        y1: u64,
        x2: u64,
        y2: u64,
    ) -> Result<VerificationReport> {
        require_positive("d", d)?;
        if y1 >= d || y2 >= d {
            return Err(Error::InvalidArgument(format!(
                "q-Lucas needs 0 <= y1, y2 < d = {d}"
            )));
        }
        let builder = ReportBuilder::new(Statement::QLucas)
            .param("d", d)
            .param("x1", x1)
            .param("y1", y1)
            .param("x2", x2)
            .param("y2", y2);
        let big = q_binom(x1 * d + y1, x2 * d + y2);
        let small = q_binom(y1, y2).scale(&binomial(x1, x2));
        let rem = (&big - &small).rem_monic(&self.phi(d)?)?;
        Ok(if rem.is_zero() {
            builder.finish(true, None)
        } else {
            builder.finish(false, Some(rem.to_canonical()))
        })
    }
}

fn finish_division(builder: ReportBuilder, quot: IntPoly, rem: IntPoly) -> VerificationReport {
    if rem.is_zero() {
        builder.finish(true, Some(quot.to_canonical()))
    } else {
        builder.finish(false, Some(rem.to_canonical()))
    }
}
