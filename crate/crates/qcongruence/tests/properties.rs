//! Property tests for the core algebra invariants: serialization roundtrips,
//! involution and ring laws, cyclotomic valuations, and agreement between the
//! exact and quotient-ring evaluation paths.

use num_bigint::BigInt;
use proptest::prelude::*;

use qcongruence::cyclotomic::phi_valuation;
use qcongruence::poly::LaurentPoly;
use qcongruence::qseries::{hyper_sum_exact, hyper_sum_mod, PochFactor, TermSpec};
use qcongruence::quotient::QuotientElem;

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-20i64..=20, -9i64..=9), 0..8).prop_map(|terms| {
        let terms: Vec<(BigInt, i64)> =
            terms.into_iter().map(|(c, e)| (BigInt::from(c), e)).collect();
        LaurentPoly::from_terms(&terms)
    })
}

proptest! {
    #[test]
    fn text_roundtrip(f in arb_poly()) {
        let back = LaurentPoly::parse(&f.to_text()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn json_roundtrip(f in arb_poly()) {
        let back = LaurentPoly::from_json(&f.to_json()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn reversed_is_involution(f in arb_poly()) {
        prop_assert_eq!(f.reversed().reversed(), f);
    }

    #[test]
    fn multiplication_commutes_and_distributes(
        f in arb_poly(), g in arb_poly(), h in arb_poly()
    ) {
        prop_assert_eq!(&f * &g, &g * &f);
        let lhs = &f * &(&g + &h);
        let rhs = &(&f * &g) + &(&f * &h);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_valuation_is_divisibility(n in 2u64..=30, m in 1i64..=90) {
        // 1 - q^m has Phi_n-adic valuation exactly [n | m]
        let f = LaurentPoly::binomial(1, m);
        let expected = if m as u64 % n == 0 { 1 } else { 0 };
        prop_assert_eq!(phi_valuation(&f, n), Some(expected));
    }

    #[test]
    fn quotient_ring_respects_poly_product(
        f in arb_poly(), g in arb_poly(), n in 2u64..=12
    ) {
        let fa = QuotientElem::from_poly(&f, n, 2);
        let ga = QuotientElem::from_poly(&g, n, 2);
        let prod = fa.mul(&ga).unwrap();
        let direct = QuotientElem::from_poly(&(&f * &g), n, 2);
        prop_assert!(prod.congruent(&direct).unwrap());
    }

    #[test]
    fn exact_and_quotient_paths_agree(
        n in (1u64..=7).prop_map(|i| 2 * i + 1), // odd moduli 3..=15
        upper in 0u32..=10,
        lin in 0i64..=4,
        sign_k in prop_oneof![Just(1i8), Just(-1i8)],
    ) {
        // a generic well-defined summand: (q;q^2)_k^2 / (q^2;q^2)_k^2 z^k
        let t = TermSpec::plain(
            vec![
                PochFactor { sign: 1, a_exp: 1, step: 2, mult: 2 },
                PochFactor { sign: 1, a_exp: 2, step: 2, mult: -2 },
            ],
            sign_k,
            0,
            lin,
        );
        let exact = hyper_sum_exact(&t, upper).unwrap();
        let via_quotient = hyper_sum_mod(&t, upper, n, 2).unwrap();
        let lifted = QuotientElem::from_fraction(&exact, n, 2).unwrap();
        prop_assert!(via_quotient.congruent(&lifted).unwrap());
    }
}
