//! Property tests for the obstruction arithmetic: verdict definitions,
//! scale invariance over the rationals, the defect inequality in both
//! directions, and agreement between the integer and rational checkers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

use wps::obstructions::{
    alpha_form, check_bishop_implies_lichnerowicz, noalpha_defect, obstruction_report, BlVerdict,
    RealTuple,
};
use wps::weights::WeightSystem;

fn rat(n: u64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Strategy for a positive rational with bounded numerator and denominator.
fn positive_rational() -> impl Strategy<Value = BigRational> {
    (1u64..=1000, 1u64..=1000).prop_map(|(n, d)| rat(n, d))
}

/// Strategy for a rational at least one.
fn rational_at_least_one() -> impl Strategy<Value = BigRational> {
    (0u64..=5000, 1u64..=1000).prop_map(|(n, d)| BigRational::from(BigInt::from(1)) + rat(n, d))
}

proptest! {
    // The report's booleans restate the exact comparisons.
    #[test]
    fn report_booleans_match_their_definitions(
        raw in prop::array::uniform4(1u64..=60),
        index in 1i64..=20,
    ) {
        let sum: i64 = raw.iter().map(|&w| w as i64).sum();
        prop_assume!(sum > index);
        let ws = WeightSystem::canonicalize(raw, (sum - index) as u64).unwrap();
        let r = obstruction_report(&ws, 3).unwrap();
        let lhs = BigInt::from(ws.degree()) * BigInt::from(index).pow(3);
        let rhs = BigInt::from(27u32) * BigInt::from(ws.weight_product());
        prop_assert_eq!(r.bishop, lhs > rhs);
        prop_assert_eq!(r.lichnerowicz, index > 3 * ws.weights()[0] as i64);
        prop_assert_eq!(BigRational::from(lhs), r.bishop_lhs.0);
        prop_assert_eq!(BigRational::from(rhs), r.bishop_rhs.0);
    }

    // The implication verdict is invariant under scaling all weights and the
    // degree by a common positive rational.
    #[test]
    fn verdict_is_scale_invariant(
        weights in prop::collection::vec(positive_rational(), 2..=7),
        d_frac in (1u64..=999).prop_map(|p| rat(p, 1000)),
        lambda in positive_rational(),
    ) {
        let sum: BigRational = weights.iter().sum();
        let d = sum * d_frac;
        let t = RealTuple::new(weights.clone(), d.clone()).unwrap();
        let scaled = RealTuple::new(
            weights.iter().map(|w| w * &lambda).collect(),
            d * &lambda,
        )
        .unwrap();
        prop_assert_eq!(
            check_bishop_implies_lichnerowicz(&t),
            check_bishop_implies_lichnerowicz(&scaled)
        );
    }

    // No sampled tuple is ever a counterexample.
    #[test]
    fn implication_holds_on_arbitrary_tuples(
        weights in prop::collection::vec(positive_rational(), 2..=7),
        d_frac in (1u64..=999).prop_map(|p| rat(p, 1000)),
    ) {
        let sum: BigRational = weights.iter().sum();
        let t = RealTuple::new(weights, sum * d_frac).unwrap();
        prop_assert_ne!(check_bishop_implies_lichnerowicz(&t), BlVerdict::Counterexample);
    }

    // Defect inequality, both directions: never positive, and zero exactly
    // when at most one entry exceeds one.
    #[test]
    fn defect_is_nonpositive_and_vanishes_exactly_at_the_boundary(
        a in prop::collection::vec(rational_at_least_one(), 1..=7),
    ) {
        let defect = noalpha_defect(&a).unwrap();
        prop_assert!(!defect.is_positive(), "positive defect {defect} at {a:?}");
        let one = BigRational::from(BigInt::from(1));
        let above = a.iter().filter(|x| **x > one).count();
        prop_assert_eq!(defect == BigRational::from(BigInt::from(0)), above <= 1);
    }

    // The one-parameter form interpolates the defect at alpha = 1 and is
    // nondecreasing on (0, 1].
    #[test]
    fn alpha_form_is_monotone_up_to_one(
        a in prop::collection::vec(rational_at_least_one(), 1..=5),
        p in 1u64..=100,
        q in 1u64..=100,
    ) {
        let (lo, hi) = (p.min(q), p.max(q));
        let small = alpha_form(&a, &rat(lo, 100)).unwrap();
        let large = alpha_form(&a, &rat(hi, 100)).unwrap();
        prop_assert!(small <= large);
        let at_one = alpha_form(&a, &BigRational::from(BigInt::from(1))).unwrap();
        prop_assert_eq!(at_one, noalpha_defect(&a).unwrap());
    }

    // The integer report and the rational checker agree when fed the same
    // quintuple.
    #[test]
    fn integer_report_agrees_with_rational_checker(
        raw in prop::array::uniform4(1u64..=60),
        index in 1i64..=30,
    ) {
        let sum: i64 = raw.iter().map(|&w| w as i64).sum();
        prop_assume!(sum > index);
        let ws = WeightSystem::canonicalize(raw, (sum - index) as u64).unwrap();
        let r = obstruction_report(&ws, 3).unwrap();
        let t = RealTuple::new(
            raw.iter().map(|&w| BigRational::from(BigInt::from(w))).collect(),
            BigRational::from(BigInt::from(ws.degree())),
        )
        .unwrap();
        let verdict = check_bishop_implies_lichnerowicz(&t);
        prop_assert_eq!(verdict == BlVerdict::Vacuous, !r.bishop);
        if verdict == BlVerdict::Implied {
            prop_assert!(r.bishop && r.lichnerowicz);
        }
        prop_assert_ne!(verdict, BlVerdict::Counterexample);
    }
}
