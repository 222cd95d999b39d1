use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::BigRat;
use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInfinity, Degree::NegInfinity) => Ordering::Equal,
            (Degree::NegInfinity, _) => Ordering::Less,
            (_, Degree::NegInfinity) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial in ℤ[q].
///
/// `coeffs[i]` is the coefficient of `q^i`. The last stored coefficient is
/// never zero; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c · q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPoly { coeffs }
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 + q + … + q^(n-1)`; zero for `n = 0`.
    pub fn repunit(n: usize) -> Self {
        IntPoly {
            coeffs: vec![BigInt::one(); n],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `q^t`.
    pub fn shift_mul(&self, t: usize) -> IntPoly {
        if self.is_zero() || t == 0 {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + t);
        coeffs.resize(t, BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Adds `c · q^shift · other` into `self`.
    pub fn add_scaled_shifted(&mut self, other: &IntPoly, c: &BigInt, shift: usize) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, BigInt::zero());
        }
        if c.is_one() {
            for (dst, src) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
                *dst += src;
            }
        } else if (-c).is_one() {
            for (dst, src) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
                *dst -= src;
            }
        } else {
            for (dst, src) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
                *dst += src * c;
            }
        }
        self.trim();
    }

    /// Schoolbook product. Zero coefficients of either factor are skipped,
    /// which keeps products with sparse factors such as `Φ_{3^j}` cheap.
    pub fn mul_schoolbook(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![BigInt::zero(); long.coeffs.len() + short.coeffs.len() - 1];
        for (j, s) in short.coeffs.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (i, l) in long.coeffs.iter().enumerate() {
                if !l.is_zero() {
                    out[i + j] += l * s;
                }
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn square(&self) -> IntPoly {
        self.mul_schoolbook(self)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul_schoolbook(self);
        }
        acc
    }

    /// Product with `[n]_q = 1 + q + … + q^(n-1)` via a sliding window sum,
    /// linear in the output length.
    pub fn mul_repunit(&self, n: usize) -> IntPoly {
        if n == 0 || self.is_zero() {
            return IntPoly::zero();
        }
        let len = self.coeffs.len() + n - 1;
        let mut out = Vec::with_capacity(len);
        let mut window = BigInt::zero();
        for i in 0..len {
            if let Some(c) = self.coeffs.get(i) {
                window += c;
            }
            if i >= n {
                if let Some(c) = self.coeffs.get(i - n) {
                    window -= c;
                }
            }
            out.push(window.clone());
        }
        IntPoly::from_coeffs(out)
    }

    /// Exact quotient by `[n]_q`, linear in the input length.
    ///
    /// Uses `[n]_q = (1 - q^n)/(1 - q)`: the quotient `Q` satisfies
    /// `p·(1-q) = Q - q^n·Q`, solved from the low end; the top `n` coefficients
    /// then have to cancel, otherwise the division was inexact.
    pub fn div_repunit_exact(&self, n: usize) -> Result<IntPoly> {
        if n == 0 {
            return Err(Error::DivisionByZeroPoly);
        }
        if n == 1 || self.is_zero() {
            return Ok(self.clone());
        }
        let len = self.coeffs.len();
        if len < n {
            return Err(Error::InexactDivision { rem: self.clone() });
        }
        // r = p·(1 - q), degree len
        let r_at = |i: usize| -> BigInt {
            let hi = self.coeffs.get(i).cloned().unwrap_or_default();
            if i == 0 {
                hi
            } else {
                hi - &self.coeffs[i - 1]
            }
        };
        let qlen = len - n + 1;
        let mut quot: Vec<BigInt> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let mut c = r_at(i);
            if i >= n {
                c += &quot[i - n];
            }
            quot.push(c);
        }
        let exact = (qlen..=len).all(|i| {
            let mut c = r_at(i);
            if i >= n {
                c += &quot[i - n];
            }
            c.is_zero()
        });
        if !exact {
            let (_, rem) = self.divrem_monic(&IntPoly::repunit(n))?;
            return Err(Error::InexactDivision { rem });
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Division with remainder by a monic polynomial: `self = m·quot + rem`
    /// with `deg rem < deg m`.
    pub fn divrem_monic(&self, m: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        check_monic(m)?;
        let dm = m.coeffs.len() - 1;
        if self.coeffs.len() <= dm {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let low: Vec<(usize, &BigInt)> = m.coeffs[..dm]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - dm];
        for top in (dm..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rem[top]);
            let base = top - dm;
            for &(j, mj) in &low {
                rem[base + j] -= &c * mj;
            }
            quot[base] = c;
        }
        rem.truncate(dm);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Remainder modulo a monic polynomial, without materializing the quotient.
    pub fn rem_monic(&self, m: &IntPoly) -> Result<IntPoly> {
        check_monic(m)?;
        let dm = m.coeffs.len() - 1;
        if self.coeffs.len() <= dm {
            return Ok(self.clone());
        }
        let low: Vec<(usize, &BigInt)> = m.coeffs[..dm]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut rem = self.coeffs.clone();
        for top in (dm..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut rem[top]);
            let base = top - dm;
            for &(j, mj) in &low {
                rem[base + j] -= &c * mj;
            }
        }
        rem.truncate(dm);
        Ok(IntPoly::from_coeffs(rem))
    }

    /// Quotient `self / m`, failing with the remainder when it is nonzero.
    pub fn exact_div(&self, m: &IntPoly) -> Result<IntPoly> {
        let (quot, rem) = self.divrem_monic(m)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision { rem })
        }
    }

    pub fn eval_rat(&self, x: &BigRat) -> BigRat {
        self.coeffs.iter().rev().fold(BigRat::zero(), |acc, c| {
            &(&acc * x) + &BigRat::from_integer(c.clone())
        })
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Substitutes `q → q^t`.
    pub fn compose_power(&self, t: usize) -> IntPoly {
        assert!(t >= 1, "compose_power needs t >= 1");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * t + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * t] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// Largest absolute coefficient, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}

fn check_monic(m: &IntPoly) -> Result<()> {
    match m.leading() {
        None => Err(Error::DivisionByZeroPoly),
        Some(l) if l.is_one() => Ok(()),
        Some(l) => Err(Error::NonMonicDivisor {
            lead: l.to_string(),
        }),
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self.to_canonical())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        IntPoly::constant(c)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        IntPoly::constant(c)
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *dst += src;
        }
        self.trim();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (dst, src) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *dst -= src;
        }
        self.trim();
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(mut self, rhs: IntPoly) -> IntPoly {
        self += &rhs;
        self
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.mul_schoolbook(rhs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        self.mul_schoolbook(&rhs)
    }
}
