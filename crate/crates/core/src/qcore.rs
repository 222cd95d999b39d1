//! q-integers, Gaussian binomials, cyclotomic polynomials, the mod-3
//! character, and the central q-binomial sums `Σ q^k [2k choose k]_q`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::IntPoly;

/// `[n]_q = 1 + q + … + q^(n-1)`.
pub fn q_int(n: i64) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "q_int needs n >= 1, got {n}"
        )));
    }
    Ok(IntPoly::repunit(n as usize))
}

/// The Legendre symbol `(k/3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Char3 {
    Minus,
    Zero,
    Plus,
}

impl Char3 {
    pub fn value(self) -> i64 {
        match self {
            Char3::Minus => -1,
            Char3::Zero => 0,
            Char3::Plus => 1,
        }
    }
}

pub fn char3(k: i64) -> Char3 {
    match k.rem_euclid(3) {
        0 => Char3::Zero,
        1 => Char3::Plus,
        _ => Char3::Minus,
    }
}

/// Lazily populated table of cyclotomic polynomials `Φ_d(q)`.
///
/// Reads take a shared lock; a missing entry is computed outside the lock
/// and inserted under the write lock, so concurrent callers may compute the
/// same entry twice but always agree on its value.
#[derive(Debug, Default)]
pub struct CyclotomicCache {
    entries: RwLock<HashMap<u64, IntPoly>>,
}

impl CyclotomicCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, d: u64) -> Result<IntPoly> {
        if d < 1 {
            return Err(Error::InvalidArgument(
                "cyclotomic order must be >= 1".into(),
            ));
        }
        if let Some(p) = self.entries.read().expect("cache lock poisoned").get(&d) {
            return Ok(p.clone());
        }
        let p = self.compute(d)?;
        self.entries
            .write()
            .expect("cache lock poisoned")
            .entry(d)
            .or_insert_with(|| p.clone());
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn compute(&self, d: u64) -> Result<IntPoly> {
        if d == 1 {
            return Ok(IntPoly::from_i64s(&[-1, 1]));
        }
        if let Some(j) = three_power_exponent(d) {
            // Φ_{3^j}(q) = [3]_{q^{3^(j-1)}}
            return Ok(IntPoly::repunit(3).compose_power(3usize.pow(j - 1)));
        }
        // [d]_q = ∏_{e | d, e > 1} Φ_e
        let mut acc = IntPoly::repunit(d as usize);
        for e in divisors(d) {
            if e > 1 && e < d {
                acc = acc
                    .exact_div(&self.get(e)?)
                    .map_err(|_| Error::InternalError(format!("Φ_{e} does not divide [{d}]_q")))?;
            }
        }
        Ok(acc)
    }
}

/// `Some(j)` when `d = 3^j` with `j >= 1`.
fn three_power_exponent(mut d: u64) -> Option<u32> {
    let mut j = 0;
    while d > 1 && d.is_multiple_of(3) {
        d /= 3;
        j += 1;
    }
    (d == 1 && j >= 1).then_some(j)
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn cyclotomic(d: u64, cache: &CyclotomicCache) -> Result<IntPoly> {
    cache.get(d)
}

/// Gaussian binomial `[n choose k]_q` by the product formula
/// `∏_{j=1}^{k} [n-k+j]_q / [j]_q`, dividing exactly after every factor.
pub fn q_binom(n: u64, k: u64) -> IntPoly {
    if k > n {
        return IntPoly::zero();
    }
    let k = k.min(n - k);
    let base = (n - k) as usize;
    let mut acc = IntPoly::one();
    for j in 1..=k as usize {
        acc = acc.mul_repunit(base + j);
        acc = acc
            .div_repunit_exact(j)
            .expect("partial q-binomial product is divisible by [j]_q");
    }
    acc
}

/// Gaussian binomial via the q-Pascal recurrence
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`. Independent of the product formula.
pub fn q_binom_pascal(n: u64, k: u64) -> IntPoly {
    if k > n {
        return IntPoly::zero();
    }
    let k = k as usize;
    // row[j] = [i choose j]_q for the current i, j <= k
    let mut row: Vec<IntPoly> = vec![IntPoly::zero(); k + 1];
    row[0] = IntPoly::one();
    for _i in 1..=n {
        for j in (1..=k).rev() {
            let mut next = row[j].shift_mul(j);
            next += &row[j - 1];
            row[j] = next;
        }
    }
    row.swap_remove(k)
}

/// The row `[n choose k]_q` for `k = 0..=k_max`, built by
/// `[n,k+1] = [n,k]·[n-k]_q / [k+1]_q`.
pub fn q_binom_row(n: u64, k_max: u64) -> Vec<IntPoly> {
    let k_max = k_max.min(n);
    let mut row = Vec::with_capacity(k_max as usize + 1);
    let mut cur = IntPoly::one();
    row.push(cur.clone());
    for k in 0..k_max {
        cur = cur
            .mul_repunit((n - k) as usize)
            .div_repunit_exact(k as usize + 1)
            .expect("q-binomial row step is exact");
        row.push(cur.clone());
    }
    row
}

/// Iterator over the central Gaussian binomials `[2k choose k]_q`, k = 0, 1, …
///
/// Each step applies `[2k+2 choose k+1] = [2k choose k]·[2k+1]_q·[2k+2]_q / [k+1]_q²`.
#[derive(Debug, Clone)]
pub struct CentralQBinomials {
    k: usize,
    cur: IntPoly,
}

impl CentralQBinomials {
    pub fn new() -> Self {
        CentralQBinomials {
            k: 0,
            cur: IntPoly::one(),
        }
    }
}

impl Default for CentralQBinomials {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for CentralQBinomials {
    type Item = IntPoly;

    fn next(&mut self) -> Option<IntPoly> {
        let k = self.k;
        let next = self
            .cur
            .mul_repunit(2 * k + 1)
            .mul_repunit(2 * k + 2)
            .div_repunit_exact(k + 1)
            .and_then(|p| p.div_repunit_exact(k + 1))
            .expect("central q-binomial step is exact");
        self.k += 1;
        Some(std::mem::replace(&mut self.cur, next))
    }
}

/// `Σ_{k=0}^{N-1} q^k [2k choose k]_q`, optionally reduced modulo a monic
/// polynomial after each accumulation step.
pub fn central_qbinom_sum(n_terms: u64, modulus: Option<&IntPoly>) -> Result<IntPoly> {
    if n_terms < 1 {
        return Err(Error::InvalidArgument("central sum needs N >= 1".into()));
    }
    if let Some(m) = modulus {
        if m.degree().finite().unwrap_or(0) < 1 {
            return Err(Error::InvalidArgument(
                "reduction modulus must have degree >= 1".into(),
            ));
        }
        if !m.is_monic() {
            return Err(Error::NonMonicDivisor {
                lead: m.leading().map(ToString::to_string).unwrap_or_default(),
            });
        }
    }
    let mut acc = IntPoly::zero();
    for (k, b) in CentralQBinomials::new().take(n_terms as usize).enumerate() {
        let term = b.shift_mul(k);
        match modulus {
            Some(m) => {
                acc += &term.rem_monic(m)?;
                acc = acc.rem_monic(m)?;
            }
            None => acc += &term,
        }
    }
    Ok(acc)
}

/// The unreduced sum and its running reduction modulo `modulus`, from one
/// pass over the central binomials.
pub fn central_qbinom_sum_both(n_terms: u64, modulus: &IntPoly) -> Result<(IntPoly, IntPoly)> {
    if n_terms < 1 {
        return Err(Error::InvalidArgument("central sum needs N >= 1".into()));
    }
    let mut full = IntPoly::zero();
    let mut reduced = IntPoly::zero();
    for (k, b) in CentralQBinomials::new().take(n_terms as usize).enumerate() {
        let term = b.shift_mul(k);
        reduced += &term.rem_monic(modulus)?;
        reduced = reduced.rem_monic(modulus)?;
        full += &term;
    }
    Ok((full, reduced))
}

/// Ordinary binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(1).unwrap(), p(&[1]));
        assert_eq!(q_int(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(q_int(6).unwrap(), p(&[1; 6]));
        assert!(matches!(q_int(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn char3_examples() {
        assert_eq!(char3(1), Char3::Plus);
        assert_eq!(char3(3), Char3::Zero);
        assert_eq!(char3(-1), Char3::Minus);
        assert_eq!(char3(-3).value(), 0);
        assert_eq!(char3(5).value(), -1);
    }

    #[test]
    fn cyclotomic_examples() {
        let cache = CyclotomicCache::new();
        assert_eq!(cyclotomic(1, &cache).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(9, &cache).unwrap(), p(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic(6, &cache).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(2, &cache).unwrap(), p(&[1, 1]));
        assert!(cyclotomic(0, &cache).is_err());
        assert!(!cache.is_empty());
    }

    #[test]
    fn cyclotomic_six_by_hand_division() {
        // Φ_6 = (q^6 - 1) / (Φ_1 Φ_2 Φ_3)
        let q6m1 = p(&[-1, 0, 0, 0, 0, 0, 1]);
        let denom = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[1, 1, 1]);
        assert_eq!(q6m1.exact_div(&denom).unwrap(), p(&[1, -1, 1]));
    }

    #[test]
    fn q_binom_examples() {
        assert_eq!(q_binom(2, 1), p(&[1, 1]));
        assert_eq!(q_binom(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binom(6, 2), p(&[1, 1, 2, 2, 3, 2, 2, 1, 1]));
        assert_eq!(q_binom(3, 5), IntPoly::zero());
        assert_eq!(q_binom(7, 0), IntPoly::one());
        assert_eq!(q_binom(0, 0), IntPoly::one());
    }

    #[test]
    fn pascal_examples() {
        assert_eq!(q_binom_pascal(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binom_pascal(6, 2), p(&[1, 1, 2, 2, 3, 2, 2, 1, 1]));
        assert_eq!(q_binom_pascal(2, 3), IntPoly::zero());
    }

    #[test]
    fn row_matches_pointwise() {
        let row = q_binom_row(12, 12);
        for (k, b) in row.iter().enumerate() {
            assert_eq!(*b, q_binom(12, k as u64), "k={k}");
        }
        assert_eq!(q_binom_row(5, 9).len(), 6);
    }

    #[test]
    fn central_sum_examples() {
        assert_eq!(central_qbinom_sum(1, None).unwrap(), p(&[1]));
        assert_eq!(central_qbinom_sum(2, None).unwrap(), p(&[1, 1, 1]));
        assert_eq!(
            central_qbinom_sum(3, None).unwrap(),
            p(&[1, 1, 2, 1, 2, 1, 1])
        );
        assert!(central_qbinom_sum(0, None).is_err());
    }

    #[test]
    fn central_sum_rejects_bad_modulus() {
        assert!(matches!(
            central_qbinom_sum(3, Some(&p(&[1, 2]))),
            Err(Error::NonMonicDivisor { .. })
        ));
        assert!(central_qbinom_sum(3, Some(&p(&[1]))).is_err());
    }

    #[test]
    fn central_sum_reduced_matches_remainder() {
        let m = p(&[1, 1, 1]).square();
        let full = central_qbinom_sum(9, None).unwrap();
        let reduced = central_qbinom_sum(9, Some(&m)).unwrap();
        assert_eq!(reduced, full.rem_monic(&m).unwrap());
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
        assert_eq!(divisors(1), vec![1]);
    }
}
