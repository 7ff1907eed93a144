//! Property tests for the orbifold invariants, driven by a corpus of
//! genuine del Pezzo systems produced by the enumerator: singularity
//! atlas sanity, threshold coherence, and agreement between the
//! existence verdict and the obstruction report.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

use wps::enumerate::{enumerate_index, EnumerationQuery};
use wps::invariants::{orbifold_invariants, KeStatus, KnownLct, LctBound};
use wps::obstructions::obstruction_report;
use wps::weights::{Rational, WeightSystem};

/// Every well-formed quasismooth non-degenerate system with index 1..=10
/// and weights up to 25, computed once.
fn corpus() -> &'static [WeightSystem] {
    static CORPUS: OnceLock<Vec<WeightSystem>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut all = Vec::new();
        for index in 1..=10 {
            let mut query = EnumerationQuery::all(index, 25);
            query.include_degenerate = false;
            all.extend(enumerate_index(&query).unwrap());
        }
        all
    })
}

fn corpus_member() -> impl Strategy<Value = WeightSystem> {
    (0..corpus().len()).prop_map(|i| corpus()[i])
}

proptest! {
    // Every recorded singularity is a genuine isolated cyclic quotient
    // point: order at least 2, both residues nonzero and coprime to it.
    #[test]
    fn singularities_are_isolated_cyclic_quotients(ws in corpus_member()) {
        let inv = orbifold_invariants(&ws).unwrap();
        for s in &inv.singularities {
            prop_assert!(s.order >= 2, "{ws}: trivial order");
            prop_assert!(s.count >= 1, "{ws}: empty locus");
            let (b1, b2) = s.weights_mod;
            for b in [b1, b2] {
                prop_assert!(b >= 1 && b < s.order, "{ws}: residue {b} out of range");
                prop_assert_eq!(gcd(b, s.order), 1, "{}: residue not coprime", ws);
            }
        }
    }

    // The anticanonical degree is the exact rational I^2 d / (a0 a1 a2 a3),
    // positive for every del Pezzo member, and the threshold upper bound is
    // a0 / I.
    #[test]
    fn global_invariants_have_their_closed_forms(ws in corpus_member()) {
        let inv = orbifold_invariants(&ws).unwrap();
        let index = BigRational::from(BigInt::from(ws.fano_index()));
        let product = BigRational::from(BigInt::from(ws.weight_product()));
        let expected =
            &index * &index * BigRational::from(BigInt::from(ws.degree())) / &product;
        prop_assert!(expected.is_positive());
        prop_assert_eq!(&inv.anticanonical_sq.0, &expected);
        let a0 = BigRational::from(BigInt::from(ws.weights()[0]));
        prop_assert_eq!(&inv.lct_upper.0, &(a0 / &index));
    }

    // Recorded threshold values never exceed the a0/I upper bound.
    #[test]
    fn known_thresholds_respect_the_upper_bound(ws in corpus_member()) {
        let inv = orbifold_invariants(&ws).unwrap();
        let mut bounds: Vec<LctBound> = Vec::new();
        match inv.lct_known {
            None => {}
            Some(KnownLct::Bound(b)) => bounds.push(b),
            Some(KnownLct::ConditionalOnMonomial { present, absent, .. }) => {
                bounds.extend(present);
                bounds.extend(absent);
            }
        }
        for bound in bounds {
            if let LctBound::Exactly(v) | LctBound::AtLeast(v) = bound {
                prop_assert!(
                    v <= inv.lct_upper,
                    "{}: lower bound {:?} above a0/I = {}",
                    ws, v, inv.lct_upper
                );
            }
        }
    }

    // The existence verdict is coherent with the exact obstruction report:
    // Bishop rules first, Lichnerowicz second, and any other verdict means
    // neither inequality fired. A member-dependent verdict always carries
    // its monomial condition.
    #[test]
    fn existence_verdict_matches_the_obstructions(ws in corpus_member()) {
        let inv = orbifold_invariants(&ws).unwrap();
        let r = obstruction_report(&ws, 3).unwrap();
        match inv.ke_status.status {
            KeStatus::ObstructedBishop => prop_assert!(r.bishop),
            KeStatus::ObstructedLichnerowicz => {
                prop_assert!(r.lichnerowicz && !r.bishop)
            }
            _ => prop_assert!(!r.bishop && !r.lichnerowicz),
        }
        prop_assert_eq!(inv.ke_status.status == KeStatus::ObstructedBishop, r.bishop);
        if inv.ke_status.status == KeStatus::DependsOnMember {
            let conditional =
                matches!(inv.lct_known, Some(KnownLct::ConditionalOnMonomial { .. }));
            prop_assert!(conditional, "member-dependent verdict without a condition");
        }
        // A certified threshold above 2/3 settles existence.
        if let Some(KnownLct::Bound(LctBound::Exactly(v) | LctBound::AtLeast(v))) =
            &inv.lct_known
        {
            if *v > Rational::new(2, 3) {
                prop_assert_eq!(inv.ke_status.status, KeStatus::Exists);
            }
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
