//! Well-formedness, degeneracy, and generic quasismoothness of weight
//! systems, with witness reports.
//!
//! Well-formedness for a surface in `P(a0,a1,a2,a3)` asks that the gcd of
//! every pair of weights divides `d` and that every triple of weights is
//! coprime. Quasismoothness of the generic degree-`d` member is decided by
//! the combinatorial subset criterion: a hypersurface that is not a linear
//! cone is quasismooth iff for every nonempty subset `J` of the variables,
//! either some monomial of degree `d` uses only variables of `J`, or there
//! are `|J|` monomials of degree `d` of the form (monomial in `J`) times one
//! extra variable, with pairwise distinct extra variables outside `J`.

use serde::{Deserialize, Serialize};

use crate::arith::representable;
use crate::weights::WeightSystem;
use num_integer::Integer;

/// Outcome of the well-formedness check, with the first failure found in
/// deterministic index order (pairs in lexicographic order, then triples).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellFormedReport {
    /// True when every pair gcd divides `d` and every triple gcd is 1.
    pub verdict: bool,
    /// First pair `(i, j)` with `g = gcd(a_i, a_j)` not dividing `d`.
    pub failing_pair: Option<(usize, usize, u64)>,
    /// First triple `(i, j, k)` of indices whose weights share a factor.
    pub failing_triple: Option<(usize, usize, usize)>,
}

/// Outcome of the generic-member quasismoothness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasismoothReport {
    /// True when the generic degree-`d` hypersurface is quasismooth.
    pub verdict: bool,
    /// True when `d` equals one of the weights, so the generic member is a
    /// linear cone (a coordinate hyperplane in disguise). The subset
    /// analysis is skipped in that case and the verdict is true.
    pub is_linear_cone: bool,
    /// For each variable index, a degree-`d` monomial witnessing the
    /// singleton condition: a pure power of that variable, or a power times
    /// one other variable. Absent when the singleton subset fails (or for
    /// linear cones, where the analysis is skipped).
    pub singleton_witnesses: [Option<[u64; 4]>; 4],
    /// All variable subsets violating the criterion, ordered by size then
    /// lexicographically. Empty iff the verdict is true or a linear cone.
    pub subset_failures: Vec<Vec<usize>>,
}

/// Check well-formedness: every pair gcd divides the degree and every
/// triple of weights is coprime.
pub fn is_well_formed(ws: &WeightSystem) -> WellFormedReport {
    let a = ws.weights();
    let d = ws.degree();
    for i in 0..4 {
        for j in i + 1..4 {
            let g = a[i].gcd(&a[j]);
            if !d.is_multiple_of(g) {
                return WellFormedReport {
                    verdict: false,
                    failing_pair: Some((i, j, g)),
                    failing_triple: None,
                };
            }
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                if a[i].gcd(&a[j]).gcd(&a[k]) > 1 {
                    return WellFormedReport {
                        verdict: false,
                        failing_pair: None,
                        failing_triple: Some((i, j, k)),
                    };
                }
            }
        }
    }
    WellFormedReport {
        verdict: true,
        failing_pair: None,
        failing_triple: None,
    }
}

/// True when `d` equals one of the weights, i.e. the generic member is a
/// linear cone.
pub fn is_degenerate(ws: &WeightSystem) -> bool {
    ws.weights().contains(&ws.degree())
}

/// Decide quasismoothness of the generic degree-`d` hypersurface by the
/// subset criterion, recording singleton witnesses and every failing subset.
pub fn is_quasismooth_generic(ws: &WeightSystem) -> QuasismoothReport {
    let a = ws.weights();
    let d = ws.degree();
    if is_degenerate(ws) {
        return QuasismoothReport {
            verdict: true,
            is_linear_cone: true,
            singleton_witnesses: [None, None, None, None],
            subset_failures: Vec::new(),
        };
    }

    let mut singleton_witnesses = [None, None, None, None];
    let mut subset_failures = Vec::new();

    for subset in subsets_by_size() {
        let k = subset.len();
        let in_subset = |e: usize| subset.contains(&e);
        let sub_weights: Vec<u64> = subset.iter().map(|&j| a[j]).collect();

        if k == 1 {
            let i = subset[0];
            if d.is_multiple_of(a[i]) {
                let mut exps = [0u64; 4];
                exps[i] = d / a[i];
                debug_assert_eq!(monomial_degree(&a, &exps), d);
                singleton_witnesses[i] = Some(exps);
                continue;
            }
            // Smallest extra variable e with d - a_e a multiple of a_i.
            let witness = (0..4)
                .filter(|&e| e != i)
                .find(|&e| d > a[e] && (d - a[e]).is_multiple_of(a[i]));
            match witness {
                Some(e) => {
                    let mut exps = [0u64; 4];
                    exps[i] = (d - a[e]) / a[i];
                    exps[e] += 1;
                    debug_assert_eq!(monomial_degree(&a, &exps), d);
                    singleton_witnesses[i] = Some(exps);
                }
                None => subset_failures.push(subset.clone()),
            }
            continue;
        }

        if representable(&sub_weights, d) {
            continue;
        }
        let extras = (0..4)
            .filter(|&e| !in_subset(e) && d > a[e] && representable(&sub_weights, d - a[e]))
            .count();
        if extras < k {
            subset_failures.push(subset.clone());
        }
    }

    QuasismoothReport {
        verdict: subset_failures.is_empty(),
        is_linear_cone: false,
        singleton_witnesses,
        subset_failures,
    }
}

/// The 15 nonempty subsets of `{0,1,2,3}`, ordered by size then
/// lexicographically.
fn subsets_by_size() -> Vec<Vec<usize>> {
    let mut subsets: Vec<Vec<usize>> = (1u8..16)
        .map(|mask| (0..4).filter(|i| mask & (1 << i) != 0).collect())
        .collect();
    subsets.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    subsets
}

fn monomial_degree(a: &[u64; 4], exps: &[u64; 4]) -> u64 {
    (0..4).map(|i| a[i] * exps[i]).sum()
}
