//! Small exact-arithmetic helpers shared by the criteria and singularity
//! modules: extended gcd, counting solutions of `a*x + b*y = d` in
//! nonnegative integers, and representability of a degree as a nonnegative
//! integer combination of weights.

use num_integer::Integer;

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub(crate) fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Number of solutions `(x, y)` in nonnegative integers of `a*x + b*y = d`.
///
/// Equivalently, the number of two-variable monomials of weighted degree `d`
/// in variables of weights `a` and `b`.
pub(crate) fn count_pair_monomials(a: u64, b: u64, d: u64) -> u64 {
    match pair_exponent_range(a, b, d) {
        None => 0,
        Some((lo, hi)) => (hi - lo) / (b / a.gcd(&b)) + 1,
    }
}

/// Smallest and largest `x` over all nonnegative solutions of `a*x + b*y = d`,
/// or `None` when there is no solution. Consecutive solutions differ by
/// `b / gcd(a, b)` in `x`.
pub(crate) fn pair_exponent_range(a: u64, b: u64, d: u64) -> Option<(u64, u64)> {
    debug_assert!(a >= 1 && b >= 1);
    let g = a.gcd(&b);
    if !d.is_multiple_of(g) {
        return None;
    }
    let (ar, br, dr) = ((a / g) as i128, (b / g) as i128, (d / g) as i128);
    // Smallest x >= 0 with a*x = d (mod b): x = d * a^{-1} mod (b/g).
    let (_, inv, _) = ext_gcd(ar, br);
    let x0 = ((dr % br) * (inv % br)).rem_euclid(br) as u64;
    let x_max = d / a;
    if x0 > x_max {
        None
    } else {
        let step = b / g;
        Some((x0, x0 + ((x_max - x0) / step) * step))
    }
}

/// True when `d` is a nonnegative integer combination of the given weights.
pub(crate) fn representable(weights: &[u64], d: u64) -> bool {
    if d == 0 {
        return true;
    }
    match weights {
        [] => false,
        [a] => d.is_multiple_of(*a),
        [a, b] => count_pair_monomials(*a, *b, d) > 0,
        [a, rest @ ..] => {
            let g = weights.iter().fold(0u64, |acc, w| acc.gcd(w));
            if !d.is_multiple_of(g) {
                return false;
            }
            (0..=d / a).any(|x| representable(rest, d - x * a))
        }
    }
}
