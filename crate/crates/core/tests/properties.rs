use num_bigint::BigInt;
use proptest::prelude::*;

use qcong_core::modring::{divide_checked, divisible, nu3, rat_mod3e, reduce, Modulus};
use qcong_core::polyring::{BigRat, IntPoly};
use qcong_core::qcore::{
    binomial, central_qbinom_sum, cyclotomic, q_binom, q_binom_pascal, q_binom_row,
    CentralQBinomials,
};
use qcong_core::{CyclotomicCache, Valuation};

fn poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..max_len).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 0..max_deg).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

fn nonzero_monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    monic(max_deg).prop_filter("degree >= 1", |m| m.degree().finite().unwrap_or(0) >= 1)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(12), b in poly(12), c in poly(12)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, IntPoly::zero());
        prop_assert_eq!(&a * &IntPoly::one(), a.clone());
        prop_assert_eq!(a.square(), &a * &a);
    }

    #[test]
    fn divrem_reassembles(p in poly(30), m in monic(8)) {
        let (q, r) = p.divrem_monic(&m).unwrap();
        prop_assert_eq!(&(&q * &m) + &r, p);
        prop_assert!(r.degree() < m.degree());
    }

    #[test]
    fn exact_div_inverts_mul(p in poly(20), m in monic(8)) {
        prop_assert_eq!((&p * &m).exact_div(&m).unwrap(), p);
    }

    #[test]
    fn repunit_fast_paths(p in poly(20), n in 1usize..15) {
        let r = IntPoly::repunit(n);
        prop_assert_eq!(p.mul_repunit(n), &p * &r);
        prop_assert_eq!((&p * &r).div_repunit_exact(n).unwrap(), p);
    }

    #[test]
    fn eval_is_a_homomorphism(a in poly(10), b in poly(10), x in -5i64..=5, d in 1i64..=4) {
        let x = BigRat::new(x.into(), d.into());
        prop_assert_eq!((&a * &b).eval_rat(&x), &a.eval_rat(&x) * &b.eval_rat(&x));
        prop_assert_eq!((&a + &b).eval_rat(&x), &a.eval_rat(&x) + &b.eval_rat(&x));
    }

    #[test]
    fn reduce_ignores_multiples(p in poly(20), r in poly(10), m in nonzero_monic(6)) {
        let modulus = Modulus::new(m.clone()).unwrap();
        let shifted = &p + &(&m * &r);
        prop_assert_eq!(reduce(&shifted, &modulus).unwrap(), reduce(&p, &modulus).unwrap());
    }

    #[test]
    fn canonical_text_round_trips(p in poly(25)) {
        prop_assert_eq!(p.to_canonical().parse::<IntPoly>().unwrap(), p);
    }

    #[test]
    fn nu3_is_additive(x in 1i64..100_000, y in 1i64..100_000) {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        prop_assert_eq!(nu3(&(&x * &y)), nu3(&x) + nu3(&y));
    }

    #[test]
    fn nu3_of_power(k in 0u32..40, u in 1i64..1000) {
        prop_assume!(u % 3 != 0);
        let x = BigInt::from(3).pow(k) * u;
        prop_assert_eq!(nu3(&x), Valuation::Finite(u64::from(k)));
    }

    #[test]
    fn rat_mod3e_is_multiplicative(
        n1 in -500i64..500, d1 in 1i64..200, n2 in -500i64..500, d2 in 1i64..200, e in 1u32..6
    ) {
        prop_assume!(d1 % 3 != 0 && d2 % 3 != 0);
        let r1 = BigRat::new(n1.into(), d1.into());
        let r2 = BigRat::new(n2.into(), d2.into());
        let modulus = BigInt::from(3).pow(e);
        let lhs = rat_mod3e(&(&r1 * &r2), e).unwrap();
        let rhs = (rat_mod3e(&r1, e).unwrap() * rat_mod3e(&r2, e).unwrap()) % &modulus;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn qbinom_symmetric(n in 0u64..30, k in 0u64..30) {
        prop_assume!(k <= n);
        prop_assert_eq!(q_binom(n, k), q_binom(n, n - k));
    }

    #[test]
    fn crt_agrees_with_single_modulus(p in poly(40), a in 1u32..=2, e in 1u32..=2) {
        let cache = CyclotomicCache::new();
        let m = Modulus::three_power(a, e, &cache).unwrap();
        // divide_checked errors if the two paths disagree
        let (q, r) = divide_checked(&p, &m).unwrap();
        prop_assert_eq!(&(&q * m.poly()) + &r, p.clone());
        let multiple = &p * m.poly();
        prop_assert!(divisible(&multiple, &m).unwrap());
    }
}

#[test]
fn qbinom_product_matches_pascal_exhaustively() {
    for n in 0..=24 {
        for k in 0..=n {
            assert_eq!(q_binom(n, k), q_binom_pascal(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn qbinom_at_one_is_binomial() {
    for n in 0..=24 {
        for k in 0..=n {
            assert_eq!(q_binom(n, k).eval_one(), binomial(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn qbinom_row_matches_entries() {
    for n in 0..=20 {
        let row = q_binom_row(n, n);
        for (k, p) in row.iter().enumerate() {
            assert_eq!(*p, q_binom(n, k as u64));
        }
    }
}

#[test]
fn cyclotomic_product_is_q_integer() {
    let cache = CyclotomicCache::new();
    for n in 1..=60u64 {
        let mut prod = IntPoly::one();
        for d in (2..=n).filter(|d| n % d == 0) {
            prod = &prod * &cyclotomic(d, &cache).unwrap();
        }
        assert_eq!(prod, IntPoly::repunit(n as usize), "n={n}");
    }
}

#[test]
fn three_power_cyclotomic_closed_form() {
    let cache = CyclotomicCache::new();
    for j in 1..=6u32 {
        let inner = 3usize.pow(j - 1);
        let expected = IntPoly::repunit(3).compose_power(inner);
        assert_eq!(cyclotomic(3u64.pow(j), &cache).unwrap(), expected, "j={j}");
    }
}

#[test]
fn central_sum_incremental_matches_direct() {
    let mut running = IntPoly::zero();
    for (k, term) in CentralQBinomials::new().take(27).enumerate() {
        let k = k as u64;
        assert_eq!(term, q_binom(2 * k, k));
        running = &running + &term.shift_mul(k as usize);
        assert_eq!(
            central_qbinom_sum(k + 1, None).unwrap(),
            running,
            "N={}",
            k + 1
        );
    }
}

#[test]
fn central_sum_reduced_matches_remainder() {
    let cache = CyclotomicCache::new();
    for a in 1..=2 {
        let m = Modulus::three_power(a, 2, &cache).unwrap();
        for n in 1..=27 {
            let full = central_qbinom_sum(n, None).unwrap();
            let reduced = central_qbinom_sum(n, Some(m.poly())).unwrap();
            assert_eq!(reduced, full.rem_monic(m.poly()).unwrap(), "a={a} N={n}");
        }
    }
}
