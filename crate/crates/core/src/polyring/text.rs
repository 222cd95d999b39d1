//! Canonical text form: comma-separated `exp:coeff` pairs for the nonzero
//! terms in increasing exponent order, e.g. `0:1,1:-2,4:1` for `1 - 2q + q^4`.
//! The zero polynomial is the empty string.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePolyError {
    #[error("malformed term {0:?}")]
    MalformedTerm(String),
    #[error("exponents must be strictly increasing (at {0})")]
    Unordered(usize),
    #[error("zero coefficient at exponent {0}")]
    ZeroCoefficient(usize),
}

impl IntPoly {
    pub fn to_canonical(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push(',');
            }
            write!(out, "{i}:{c}").expect("writing to a String cannot fail");
        }
        out
    }

    /// Canonical form, keeping only the first `max_terms` terms and noting
    /// how many were dropped.
    pub fn to_canonical_elided(&self, max_terms: usize) -> String {
        let total = self.term_count();
        if total <= max_terms {
            return self.to_canonical();
        }
        let mut out = String::new();
        for (i, c) in self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .take(max_terms)
        {
            if !out.is_empty() {
                out.push(',');
            }
            write!(out, "{i}:{c}").expect("writing to a String cannot fail");
        }
        write!(out, ",... ({} more terms)", total - max_terms).expect("infallible");
        out
    }

    pub fn parse_canonical(s: &str) -> Result<IntPoly, ParsePolyError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntPoly::zero());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in s.split(',') {
            let bad = || ParsePolyError::MalformedTerm(term.to_string());
            let (e, c) = term.split_once(':').ok_or_else(bad)?;
            let e: usize = e.trim().parse().map_err(|_| bad())?;
            let c: BigInt = c.trim().parse().map_err(|_| bad())?;
            if c.is_zero() {
                return Err(ParsePolyError::ZeroCoefficient(e));
            }
            if e < coeffs.len() {
                return Err(ParsePolyError::Unordered(e));
            }
            coeffs.resize(e, BigInt::zero());
            coeffs.push(c);
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

impl FromStr for IntPoly {
    type Err = ParsePolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IntPoly::parse_canonical(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(
            IntPoly::from_i64s(&[1, -2, 0, 0, 1]).to_canonical(),
            "0:1,1:-2,4:1"
        );
        assert_eq!(
            IntPoly::from_i64s(&[1, -1, 1]).to_canonical(),
            "0:1,1:-1,2:1"
        );
        assert_eq!(IntPoly::zero().to_canonical(), "");
    }

    #[test]
    fn parse_round_trip() {
        let p = IntPoly::from_i64s(&[0, 5, 0, -123456789, 0, 1]);
        assert_eq!(p.to_canonical().parse::<IntPoly>().unwrap(), p);
        assert_eq!("".parse::<IntPoly>().unwrap(), IntPoly::zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            "1:2,0:1".parse::<IntPoly>(),
            Err(ParsePolyError::Unordered(0))
        ));
        assert!(matches!(
            "x:1".parse::<IntPoly>(),
            Err(ParsePolyError::MalformedTerm(_))
        ));
        assert!(matches!(
            "3:0".parse::<IntPoly>(),
            Err(ParsePolyError::ZeroCoefficient(3))
        ));
    }

    #[test]
    fn elision() {
        let p = IntPoly::repunit(5);
        assert_eq!(p.to_canonical_elided(10), p.to_canonical());
        assert_eq!(p.to_canonical_elided(2), "0:1,1:1,... (3 more terms)");
    }
}
