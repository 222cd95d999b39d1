//! Checks over ℤ and ℚ: the central binomial sums, their 3-adic behaviour,
//! and the q → 1 limit of `R(a,q)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::report::{ReportBuilder, Statement, VerificationReport};
use super::{pow3, require_positive, Verifier};
use crate::error::{Error, Result};
use crate::modring::{nu3, rat_mod3e, Valuation};
use crate::polyring::BigRat;
use crate::qcore::char3;

/// Largest `p^a` accepted by [`verify_sun_tauraso`].
pub const SUN_TAURASO_BOUND: u64 = 1 << 20;

/// Largest `a` for which [`Verifier::verify_remark14`] also evaluates the
/// cleared polynomials `D` and `D·R` at `q = 1`; their degree grows like `9^a`.
pub const R_AT_ONE_CROSSCHECK_MAX: u32 = 4;

/// Running sums `Σ_{k<n} C(2k,k)` together with `C(2n,n)`, n = 0, 1, …
struct CentralBinomialSums {
    n: u64,
    central: BigInt,
    sum: BigInt,
}

impl CentralBinomialSums {
    fn new() -> Self {
        CentralBinomialSums {
            n: 0,
            central: BigInt::one(),
            sum: BigInt::zero(),
        }
    }

    /// Moves from `n` to `n + 1`.
    fn step(&mut self) {
        let n = self.n;
        self.sum += &self.central;
        self.central = &self.central * (2 * n + 1) * (2 * n + 2) / ((n + 1) * (n + 1));
        self.n += 1;
    }

    fn advance_to(&mut self, n: u64) {
        while self.n < n {
            self.step();
        }
    }
}

fn central_binomial_sum(n: u64) -> BigInt {
    let mut s = CentralBinomialSums::new();
    s.advance_to(n);
    s.sum
}

fn lemma31_value(x: &BigInt) -> BigInt {
    let three = BigInt::from(3);
    let r = x.mod_floor(&three);
    let chi = if r.is_zero() {
        0
    } else if r.is_one() {
        1
    } else {
        -1
    };
    BigInt::from(2) * x * x - x * chi
}

/// `k ≡ l (mod 3^a)` implies `2k² - k(k/3) ≡ 2l² - l(l/3) (mod 3^(a+1))`.
pub fn verify_lemma31(a: u32, k: i64, l: i64) -> Result<VerificationReport> {
    require_positive("a", a.into())?;
    let full = BigInt::from(pow3(a)?);
    let (kb, lb) = (BigInt::from(k), BigInt::from(l));
    if !(&kb - &lb).mod_floor(&full).is_zero() {
        return Err(Error::PreconditionViolated(format!(
            "{k} and {l} are not congruent mod 3^{a}"
        )));
    }
    let builder = ReportBuilder::new(Statement::Lemma31)
        .param("a", a)
        .param("k", k)
        .param("l", l);
    let diff = lemma31_value(&kb) - lemma31_value(&lb);
    let pass = diff.mod_floor(&(full * 3)).is_zero();
    Ok(builder.finish(pass, Some(diff.to_string())))
}

/// Every pair `0 <= k < l <= 3^(a+1)` with `k ≡ l (mod 3^a)`, folded into
/// one report. The witness is the pair count on success, the first failing
/// pair `k,l` otherwise.
pub fn verify_lemma31_sweep(a: u32) -> Result<VerificationReport> {
    require_positive("a", a.into())?;
    let step = pow3(a)? as i64;
    let top = 3 * step;
    let builder = ReportBuilder::new(Statement::Lemma31)
        .param("a", a)
        .param("sweep", top);
    let mut pairs = 0u64;
    for k in 0..=top {
        let mut l = k + step;
        while l <= top {
            if !verify_lemma31(a, k, l)?.pass {
                return Ok(builder.finish(false, Some(format!("{k},{l}"))));
            }
            pairs += 1;
            l += step;
        }
    }
    Ok(builder.finish(true, Some(pairs.to_string())))
}

/// `Σ_{k<3^a} C(2k,k) ≡ 3^(2a) (mod 3^(2a+1))`, and `ν₃` of the sum is
/// exactly `2a`. The witness is the sum.
pub fn verify_ssz12(a: u32) -> Result<VerificationReport> {
    require_positive("a", a.into())?;
    let builder = ReportBuilder::new(Statement::Ssz12).param("a", a);
    let sum = central_binomial_sum(pow3(a)?);
    let target = BigInt::from(3).pow(2 * a);
    let modulus = &target * 3;
    let congruent = (&sum - &target).mod_floor(&modulus).is_zero();
    let exact_valuation = nu3(&sum) == Valuation::Finite(2 * u64::from(a));
    Ok(builder.finish(congruent && exact_valuation, Some(sum.to_string())))
}

fn ssz_quotient_report(n: u64, sum: &BigInt, central: &BigInt) -> VerificationReport {
    let builder = ReportBuilder::new(Statement::SszQuotient).param("n", n);
    let den = BigInt::from(n) * n * central;
    let r = BigRat::new(sum.clone(), den);
    let pass = matches!(rat_mod3e(&r, 1), Ok(res) if res == BigInt::from(2));
    builder.finish(pass, Some(r.to_string()))
}

/// `Σ_{k<n} C(2k,k) / (n² C(2n,n)) ≡ -1 (mod 3)`. The witness is the
/// reduced rational.
pub fn verify_ssz_quotient(n: u64) -> Result<VerificationReport> {
    require_positive("n", n)?;
    let mut s = CentralBinomialSums::new();
    s.advance_to(n);
    Ok(ssz_quotient_report(n, &s.sum, &s.central))
}

/// [`verify_ssz_quotient`] for `n = 1..=n_max`, sharing one incremental pass.
pub fn verify_ssz_quotient_sweep(n_max: u64) -> Result<Vec<VerificationReport>> {
    require_positive("n_max", n_max)?;
    let mut s = CentralBinomialSums::new();
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        s.advance_to(n);
        out.push(ssz_quotient_report(n, &s.sum, &s.central));
    }
    Ok(out)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Σ_{k<p^a} C(2k,k) ≡ (p^a/3) (mod p²)`. The witness is the sum mod `p²`.
pub fn verify_sun_tauraso(p: u64, a: u32) -> Result<VerificationReport> {
    require_positive("a", a.into())?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pa = p
        .checked_pow(a)
        .filter(|&pa| pa <= SUN_TAURASO_BOUND)
        .ok_or_else(|| {
            Error::InvalidArgument(format!("p^a exceeds the bound {SUN_TAURASO_BOUND}"))
        })?;
    let builder = ReportBuilder::new(Statement::SunTauraso)
        .param("p", p)
        .param("a", a);
    let modulus = BigInt::from(p * p);
    let residue = central_binomial_sum(pa).mod_floor(&modulus);
    let expected = BigInt::from(char3(pa as i64).value()).mod_floor(&modulus);
    Ok(builder.finish(residue == expected, Some(residue.to_string())))
}

/// `R(a,1) = Σ_{k ≡ 1 (3), k < 3^a} (-1)^k / k²` as an exact rational.
pub fn r_at_one(a: u32) -> Result<BigRat> {
    require_positive("a", a.into())?;
    let full = pow3(a)?;
    let mut acc = BigRat::zero();
    for k in (1..full).filter(|k| k % 3 == 1) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        acc = &acc + &BigRat::new(BigInt::from(sign), BigInt::from(k) * k);
    }
    Ok(acc)
}

impl Verifier {
    /// `lim_{q→1} R(a,q) ≡ -1 (mod 3)`. For small `a` the value is also
    /// recomputed from the cleared polynomials `D·R` and `D` at `q = 1`.
    pub fn verify_remark14(&self, a: u32) -> Result<VerificationReport> {
        let value = r_at_one(a)?;
        let builder = ReportBuilder::new(Statement::Remark14).param("a", a);
        if a <= R_AT_ONE_CROSSCHECK_MAX {
            let (d, dr) = self.build_r_cleared(a)?;
            let via_poly = BigRat::new(dr.eval_one(), d.eval_one());
            if via_poly != value {
                return Err(Error::InternalError(format!(
                    "R({a},1) = {value} but D·R/D at q=1 gives {via_poly}"
                )));
            }
        }
        let pass = rat_mod3e(&value, 1)? == BigInt::from(2);
        Ok(builder.finish(pass, Some(value.to_string())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: each C(2k,k) from the multiplicative formula.
    fn brute_sum(n: u64) -> BigInt {
        (0..n).map(|k| crate::qcore::binomial(2 * k, k)).sum()
    }

    #[test]
    fn incremental_sums_match_brute_force() {
        for n in 0..60 {
            assert_eq!(central_binomial_sum(n), brute_sum(n), "n={n}");
        }
        assert_eq!(brute_sum(9), BigInt::from(17577));
        assert_eq!(brute_sum(3), BigInt::from(9));
    }

    #[test]
    fn lemma31_examples() {
        let r = verify_lemma31(1, 1, 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("-27"));
        assert!(verify_lemma31(1, 5, 5).unwrap().pass);
        let r = verify_lemma31(2, 2, 11).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("-243"));
        assert!(matches!(
            verify_lemma31(1, 1, 2),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn lemma31_negative_arguments() {
        assert!(verify_lemma31(2, -7, 2).unwrap().pass);
        assert!(verify_lemma31(1, -1, 2).unwrap().pass);
    }

    #[test]
    fn ssz12_examples() {
        let r = verify_ssz12(1).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("9"));
        let r = verify_ssz12(2).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("17577"));
        assert!(verify_ssz12(0).is_err());
    }

    #[test]
    fn ssz_quotient_examples() {
        for (n, w) in [(1, "1/2"), (2, "1/8"), (3, "1/20")] {
            let r = verify_ssz_quotient(n).unwrap();
            assert!(r.pass, "n={n}");
            assert_eq!(r.witness.as_deref(), Some(w));
        }
        let sweep = verify_ssz_quotient_sweep(30).unwrap();
        for (i, r) in sweep.iter().enumerate() {
            assert_eq!(
                r.witness,
                verify_ssz_quotient(i as u64 + 1).unwrap().witness
            );
        }
    }

    #[test]
    fn sun_tauraso_examples() {
        let r = verify_sun_tauraso(5, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("24"));
        assert_eq!(brute_sum(5), BigInt::from(99));
        let r = verify_sun_tauraso(7, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("1"));
        assert_eq!(brute_sum(7), BigInt::from(1275));
        let r = verify_sun_tauraso(3, 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("0"));
        assert_eq!(verify_sun_tauraso(9, 1), Err(Error::NotPrime(9)));
        assert!(verify_sun_tauraso(2, 40).is_err());
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn remark14_examples() {
        let v = Verifier::new();
        let r = v.verify_remark14(1).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("-1"));
        let r = v.verify_remark14(2).unwrap();
        assert!(r.pass);
        assert_eq!(r.witness.as_deref(), Some("-751/784"));
        let (d, dr) = v.build_r_cleared(1).unwrap();
        assert_eq!(
            BigRat::new(dr.eval_one(), d.eval_one()),
            BigRat::from_integer((-1).into())
        );
    }
}
