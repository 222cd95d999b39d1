use qcong_core::modring::{divisible, reduce, Modulus};
use qcong_core::polyring::IntPoly;
use qcong_core::qcore::{central_qbinom_sum, q_binom};
use qcong_core::theorems::{psi_check, Control, PsiKind, PsiSpec, Statement};
use qcong_core::{Error, Verifier};

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

/// The a = 1, m = 1 central sum.
fn s3() -> IntPoly {
    p(&[1, 1, 2, 1, 2, 1, 1])
}

#[test]
fn eq13_base_case_quotient() {
    let r = Verifier::new().verify_eq13(1, 1).unwrap();
    assert!(r.pass);
    assert_eq!(r.statement, Statement::Eq13);
    assert_eq!(r.witness.as_deref(), Some("0:1,1:-1,2:1"));
}

#[test]
fn eq13_second_multiple() {
    assert!(Verifier::new().verify_eq13(1, 2).unwrap().pass);
}

#[test]
fn eq13_truncated_control_fails() {
    let r = Verifier::new().control_eq13_truncated(1, 1).unwrap();
    assert!(!r.pass);
    assert_eq!(r.control(), Some(Control::TruncatedSum.code()));
    // 1 + q + q^2 mod (1+q+q^2)^2 is itself
    assert_eq!(r.witness.as_deref(), Some("0:1,1:1,2:1"));
}

#[test]
fn eq13_rejects_zero_parameters() {
    let v = Verifier::new();
    assert!(matches!(
        v.verify_eq13(0, 1),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        v.verify_eq13(1, 0),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn r_cleared_examples() {
    let v = Verifier::new();
    let (d, dr) = v.build_r_cleared(1).unwrap();
    assert_eq!(d, IntPoly::one());
    assert_eq!(dr, p(&[0, -1]));

    // a = 2: K = {1, 4, 7}; term k = 4 has exponent 3 and coefficient -1.
    let (d, dr) = v.build_r_cleared(2).unwrap();
    let expected_d = IntPoly::repunit(4).square() * IntPoly::repunit(7).square();
    assert_eq!(d, expected_d);
    let d1 = IntPoly::repunit(4).square() * IntPoly::repunit(7).square();
    let d4 = IntPoly::repunit(7).square();
    let d7 = IntPoly::repunit(4).square();
    // k=1: -(1 + (0-2)(1-q)) = -(-1 + 2q) ; k=4: +q^3 (1 - (1-q^4)) = q^7 ;
    // k=7: -q^9 (1 + (2-2)(1-q^7)) = -q^9
    let t1 = &d1 * &p(&[1, -2]);
    let t4 = d4.shift_mul(7);
    let t7 = -d7.shift_mul(9);
    assert_eq!(dr, &(&t1 + &t4) + &t7);
    assert!(v.build_r_cleared(0).is_err());
}

#[test]
fn eq14_base_case_difference_is_phi3() {
    let v = Verifier::new();
    let t = v.eq14_quotient(1).unwrap();
    assert_eq!(t, p(&[1, -1, 1]));
    let (d, dr) = v.eq14_cleared(1).unwrap();
    let diff = &(&d * &t) - &dr.scale(&2.into());
    assert_eq!(diff, p(&[1, 1, 1]));
    let r = v.verify_eq14(1).unwrap();
    assert!(r.pass);
    assert_eq!(r.witness.as_deref(), Some("0:1"));
}

#[test]
fn eq14_perturbed_control() {
    let r = Verifier::new().control_eq14_perturbed(1).unwrap();
    assert!(!r.pass);
    assert_eq!(r.witness.as_deref(), Some("0:-2"));
}

#[test]
fn eq14_second_level() {
    assert!(Verifier::new().verify_eq14(2).unwrap().pass);
}

#[test]
fn eq21_zero_psi_base_case() {
    let v = Verifier::new();
    let psi = PsiSpec::zero(1, 1).unwrap();
    let (sum, shift) = v.eq21_sum(1, 1, &psi).unwrap();
    assert_eq!(shift, 0);
    assert_eq!(sum, &q_binom(6, 1) - &q_binom(6, 2));
    let r = v.verify_eq21(1, 1, &psi).unwrap();
    assert!(r.pass);
    assert_eq!(r.param("psi"), Some(PsiKind::Zero.code()));
}

#[test]
fn eq21_psi_m_base_case() {
    let v = Verifier::new();
    let psi = PsiSpec::psi_m(1, 1).unwrap();
    let (sum, _) = v.eq21_sum(1, 1, &psi).unwrap();
    assert_eq!(sum, -s3());
    let r = v.verify_eq21(1, 1, &psi).unwrap();
    assert!(r.pass);
    assert_eq!(r.witness.as_deref(), Some("0:-1,1:1,2:-1"));
}

#[test]
fn eq21_identity_psi_rejected() {
    let v = Verifier::new();
    let psi = PsiSpec::identity(1, 1).unwrap();
    assert_eq!(
        v.verify_eq21(1, 1, &psi),
        Err(Error::PsiHypothesisViolated { k: -2, j: 0 })
    );
}

#[test]
fn eq21_negative_psi_is_shifted() {
    // ψ ≡ -3^a·m is constant, so it satisfies both hypotheses.
    let v = Verifier::new();
    let psi = PsiSpec::from_table(1, 2, vec![-6; 19]).unwrap();
    let (sum, shift) = v.eq21_sum(1, 2, &psi).unwrap();
    assert_eq!(shift, 6);
    let (plain, _) = v.eq21_sum(1, 2, &PsiSpec::zero(1, 2).unwrap()).unwrap();
    assert_eq!(sum, plain);
    assert!(v.verify_eq21(1, 2, &psi).unwrap().pass);
}

#[test]
fn eq21_psi_must_match_a() {
    let v = Verifier::new();
    let psi = PsiSpec::zero(2, 1).unwrap();
    assert!(matches!(
        v.verify_eq21(1, 1, &psi),
        Err(Error::InvalidArgument(_))
    ));
    // the m = 1 window [-3, 6] does not reach k = 3·3 - 1
    let psi = PsiSpec::zero(1, 1).unwrap();
    assert!(matches!(
        v.verify_eq21(1, 3, &psi),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn identity33_base_case() {
    let v = Verifier::new();
    let (lhs, rhs) = v.identity33_sides(1, 1).unwrap();
    assert_eq!(lhs, s3());
    assert_eq!(rhs, s3());
    assert!(v.verify_identity33(1, 1).unwrap().pass);
}

#[test]
fn identity33_second_multiple_degree() {
    let v = Verifier::new();
    let (lhs, rhs) = v.identity33_sides(1, 2).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs.degree().finite(), Some(30));
    assert!(v.verify_identity33(1, 2).unwrap().pass);
}

#[test]
fn identity33_dropped_term_control() {
    let r = Verifier::new().control_identity33_dropped(1, 1).unwrap();
    assert!(!r.pass);
    // the dropped term is q^2 [4,2]_q
    assert_eq!(r.witness.as_deref(), Some("2:-1,3:-1,4:-2,5:-1,6:-1"));
}

#[test]
fn lemma32_examples() {
    let v = Verifier::new();
    for a in 1..=2 {
        for psi in [PsiSpec::zero(a, 1).unwrap(), PsiSpec::psi_m(a, 1).unwrap()] {
            let r = v.verify_lemma32(a, &psi).unwrap();
            assert!(r.pass, "a={a} psi={:?}", psi.kind());
        }
    }
    assert!(matches!(
        v.verify_lemma32(1, &PsiSpec::identity(1, 1).unwrap()),
        Err(Error::PsiHypothesisViolated { .. })
    ));
}

#[test]
fn lemma32_right_side_matches_r_for_psi_one() {
    // With ψ = ψ₁ the right side S equals -R(a,q) mod Φ_{3^a}; both are
    // cleared by the same D.
    let v = Verifier::new();
    for a in 1..=2 {
        let psi = PsiSpec::psi_m(a, 1).unwrap();
        let (d, ds, shift) = v.lemma32_cleared_rhs(a, &psi).unwrap();
        let (d2, dr) = v.build_r_cleared(a).unwrap();
        assert_eq!(d, d2);
        let phi = v.cache().get(3u64.pow(a)).unwrap();
        let lhs = (&ds + &dr.shift_mul(shift)).rem_monic(&phi).unwrap();
        assert!(lhs.is_zero(), "a={a}");
    }
    let (_, ds, _) = v
        .lemma32_cleared_rhs(1, &PsiSpec::psi_m(1, 1).unwrap())
        .unwrap();
    assert_eq!(ds, p(&[0, 0, 0, 0, 1]));
}

#[test]
fn psi_m_passes_hypotheses_on_grid() {
    for a in 1..=2 {
        for m in 1..=3 {
            assert!(
                psi_check(&PsiSpec::psi_m(a, m).unwrap()).pass,
                "a={a} m={m}"
            );
        }
    }
}

#[test]
fn q_lucas_examples() {
    let v = Verifier::new();
    assert!(v.q_lucas_check(3, 1, 1, 0, 2).unwrap().pass);
    assert!(v.q_lucas_check(3, 2, 0, 0, 2).unwrap().pass);
    assert!(v.q_lucas_check(2, 1, 0, 1, 0).unwrap().pass);
    assert!(matches!(
        v.q_lucas_check(3, 1, 3, 0, 0),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        v.q_lucas_check(0, 1, 0, 0, 0),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn reduce_by_phi3_of_qbinom() {
    let phi3 = Modulus::new(p(&[1, 1, 1])).unwrap();
    assert!(reduce(&q_binom(4, 2), &phi3).unwrap().is_zero());
    assert!(reduce(&q_binom(6, 2), &phi3).unwrap().is_zero());
}

#[test]
fn shift_does_not_change_divisibility() {
    let cache = qcong_core::CyclotomicCache::new();
    let m = Modulus::three_power(1, 2, &cache).unwrap();
    let samples = [s3(), central_qbinom_sum(2, None).unwrap(), q_binom(6, 3)];
    for s in &samples {
        for t in 0..7 {
            assert_eq!(
                divisible(s, &m).unwrap(),
                divisible(&s.shift_mul(t), &m).unwrap()
            );
        }
    }
}
