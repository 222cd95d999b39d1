//! Reduction and divisibility in ℤ[q] modulo monic polynomials, coprimality
//! against cyclotomic polynomials, and 3-adic valuations and residues.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyring::{BigRat, IntPoly};
use crate::qcore::CyclotomicCache;

/// A 3-adic valuation; `Infinite` exactly for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// A monic modulus, optionally with a factorization into pairwise coprime
/// monic factors whose product is the modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus {
    poly: IntPoly,
    factors: Option<Vec<IntPoly>>,
}

impl Modulus {
    pub fn new(poly: IntPoly) -> Result<Self> {
        check_modulus(&poly)?;
        Ok(Modulus {
            poly,
            factors: None,
        })
    }

    /// The product of `factors` must equal `poly` exactly.
    pub fn with_factors(poly: IntPoly, factors: Vec<IntPoly>) -> Result<Self> {
        check_modulus(&poly)?;
        for f in &factors {
            check_modulus(f)?;
        }
        let product = factors
            .iter()
            .fold(IntPoly::one(), |acc, f| acc.mul_schoolbook(f));
        if product != poly {
            return Err(Error::InvalidArgument(
                "factorization does not multiply to the modulus".into(),
            ));
        }
        Ok(Modulus {
            poly,
            factors: Some(factors),
        })
    }

    /// `[3^a]_q^e` with its factorization `{Φ_{3^j}^e : 1 <= j <= a}`.
    pub fn three_power(a: u32, e: u32, cache: &CyclotomicCache) -> Result<Self> {
        if a < 1 || e < 1 {
            return Err(Error::InvalidArgument(
                "three-power modulus needs a >= 1 and e >= 1".into(),
            ));
        }
        let base = IntPoly::repunit(3usize.pow(a));
        let factors = (1..=a)
            .map(|j| cache.get(3u64.pow(j)).map(|phi| phi.pow(e)))
            .collect::<Result<Vec<_>>>()?;
        Modulus::with_factors(base.pow(e), factors)
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn factors(&self) -> Option<&[IntPoly]> {
        self.factors.as_deref()
    }
}

fn check_modulus(p: &IntPoly) -> Result<()> {
    match p.leading() {
        None => Err(Error::DivisionByZeroPoly),
        Some(l) if !l.is_one() => Err(Error::NonMonicDivisor {
            lead: l.to_string(),
        }),
        Some(_) if p.degree().finite() == Some(0) => Err(Error::InvalidArgument(
            "modulus must have degree >= 1".into(),
        )),
        Some(_) => Ok(()),
    }
}

pub fn reduce(p: &IntPoly, m: &Modulus) -> Result<IntPoly> {
    p.rem_monic(&m.poly)
}

/// Quotient and remainder of `p` by `m`. When `m` carries a factorization,
/// divisibility by the product is cross-checked against divisibility by each
/// factor; disagreement is an internal error.
pub fn divide_checked(p: &IntPoly, m: &Modulus) -> Result<(IntPoly, IntPoly)> {
    let (quot, rem) = p.divrem_monic(&m.poly)?;
    if let Some(factors) = &m.factors {
        let mut all = true;
        for f in factors {
            all &= p.rem_monic(f)?.is_zero();
        }
        if all != rem.is_zero() {
            return Err(Error::InternalError(format!(
                "single-modulus divisibility ({}) disagrees with per-factor divisibility ({all})",
                rem.is_zero()
            )));
        }
    }
    Ok((quot, rem))
}

pub fn divisible(p: &IntPoly, m: &Modulus) -> Result<bool> {
    if m.factors.is_some() {
        return divide_checked(p, m).map(|(_, rem)| rem.is_zero());
    }
    reduce(p, m).map(|r| r.is_zero())
}

/// Whether `p` is coprime to `Φ_d`. Since `Φ_d` is irreducible over ℚ, this
/// holds iff `Φ_d` does not divide `p`.
pub fn coprime_to_cyclotomic(p: &IntPoly, d: u64, cache: &CyclotomicCache) -> Result<bool> {
    let phi = cache.get(d)?;
    Ok(!p.rem_monic(&phi)?.is_zero())
}

pub fn nu3(n: &BigInt) -> Valuation {
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let three = BigInt::from(3);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&three);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        n = q;
        v += 1;
    }
}

pub fn nu3_i64(n: i64) -> Valuation {
    nu3(&BigInt::from(n))
}

/// Inverse of `x` modulo `modulus` by the extended Euclidean algorithm.
pub fn mod_inverse(x: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let ext = x.mod_floor(modulus).extended_gcd(modulus);
    ext.gcd.is_one().then(|| ext.x.mod_floor(modulus))
}

/// Residue of a 3-integral rational modulo `3^e`, in `[0, 3^e)`.
pub fn rat_mod3e(r: &BigRat, e: u32) -> Result<BigInt> {
    if e < 1 {
        return Err(Error::InvalidArgument("rat_mod3e needs e >= 1".into()));
    }
    if (r.den() % 3u32).is_zero() {
        return Err(Error::NotThreeIntegral(r.to_string()));
    }
    let modulus = BigInt::from(3).pow(e);
    let inv = mod_inverse(r.den(), &modulus)
        .ok_or_else(|| Error::InternalError("denominator not invertible mod 3^e".into()))?;
    Ok((r.num() * inv).mod_floor(&modulus))
}
