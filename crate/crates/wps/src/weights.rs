//! Weight systems `(a0, a1, a2, a3; d)` and their elementary invariants.
//!
//! The canonical form keeps the weights sorted ascending; the degree is
//! arbitrary positive. `gcd(a0,..,a3) = 1` is *not* assumed at this level:
//! it is a consequence of well-formedness and is tested in [`crate::criteria`].

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::{Result, WpsError};

/// A weight quadruple with a degree: the datum `(a0, a1, a2, a3; d)` of a
/// degree-`d` hypersurface in `P(a0, a1, a2, a3)`.
///
/// Invariants: `1 <= a0 <= a1 <= a2 <= a3` and `d >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightSystem {
    weights: [u64; 4],
    degree: u64,
}

impl WeightSystem {
    /// Build a weight system from weights in any order, sorting them.
    ///
    /// Rejects nonpositive entries and a nonpositive degree.
    pub fn canonicalize(raw: [u64; 4], degree: u64) -> Result<Self> {
        if raw.contains(&0) {
            return Err(WpsError::InvalidInput(format!(
                "weights must be positive, got {raw:?}"
            )));
        }
        if degree == 0 {
            return Err(WpsError::InvalidInput("degree must be positive".into()));
        }
        let mut weights = raw;
        weights.sort_unstable();
        Ok(WeightSystem { weights, degree })
    }

    /// Like [`WeightSystem::canonicalize`] but with the degree derived from a
    /// requested Fano index: `d = a0+a1+a2+a3 - index`.
    pub fn with_index(raw: [u64; 4], index: i64) -> Result<Self> {
        if raw.contains(&0) {
            return Err(WpsError::InvalidInput(format!(
                "weights must be positive, got {raw:?}"
            )));
        }
        let sum: i64 = raw.iter().map(|&w| w as i64).sum();
        let d = sum - index;
        if d <= 0 {
            return Err(WpsError::InvalidInput(format!(
                "index {index} leaves no positive degree for weights {raw:?}"
            )));
        }
        Self::canonicalize(raw, d as u64)
    }

    /// The weights, ascending.
    pub fn weights(&self) -> [u64; 4] {
        self.weights
    }

    /// The degree `d`.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// The Fano index `I = a0+a1+a2+a3 - d`. May be zero or negative; the
    /// surface is del Pezzo exactly when the index is positive.
    pub fn fano_index(&self) -> i64 {
        self.weights.iter().map(|&w| w as i64).sum::<i64>() - self.degree as i64
    }

    /// True when the Fano index is positive.
    pub fn is_fano(&self) -> bool {
        self.fano_index() > 0
    }

    /// The anticanonical self-intersection `(-K)^2 = I^2 d / (a0 a1 a2 a3)`,
    /// as a reduced exact rational. Defined only for Fano weight systems.
    pub fn anticanonical_degree(&self) -> Result<BigRational> {
        let index = self.fano_index();
        if index <= 0 {
            return Err(WpsError::Domain(format!(
                "anticanonical degree needs a positive Fano index, {self} has I = {index}"
            )));
        }
        let numer = BigInt::from(index) * BigInt::from(index) * BigInt::from(self.degree);
        let denom = self
            .weights
            .iter()
            .map(|&w| BigInt::from(w))
            .product::<BigInt>();
        Ok(BigRational::new(numer, denom))
    }

    /// The product `a0 a1 a2 a3` (fits comfortably in `u128` for any bound
    /// this crate enumerates).
    pub fn weight_product(&self) -> u128 {
        self.weights.iter().map(|&w| w as u128).product()
    }
}

impl std::fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a0, a1, a2, a3] = self.weights;
        write!(f, "({a0},{a1},{a2},{a3};{})", self.degree)
    }
}

/// Render a rational as `p` or `p/q`, reduced.
pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// An exact rational that serializes as the string `p` or `p/q`.
///
/// Thin wrapper over [`BigRational`] so that reports containing exact values
/// round-trip through JSON without any float conversion.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    /// The rational `numer/denom`, reduced. Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Borrow the underlying exact value.
    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(q: BigRational) -> Self {
        Rational(q)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from(BigInt::from(n)))
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&rational_string(&self.0))
    }
}

impl std::str::FromStr for Rational {
    type Err = WpsError;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |part: &str| -> Result<BigInt> {
            part.trim()
                .parse::<BigInt>()
                .map_err(|_| WpsError::InvalidInput(format!("not an integer: {part:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let denom = parse_int(d)?;
                if denom == BigInt::from(0) {
                    return Err(WpsError::InvalidInput("zero denominator".into()));
                }
                Ok(Rational(BigRational::new(parse_int(n)?, denom)))
            }
            None => Ok(Rational(BigRational::from(parse_int(s)?))),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ws(raw: [u64; 4], d: u64) -> WeightSystem {
        WeightSystem::canonicalize(raw, d).unwrap()
    }

    #[test]
    fn canonicalize_sorts_and_preserves_degree() {
        let w = ws([38, 21, 13, 11], 76);
        assert_eq!(w.weights(), [11, 13, 21, 38]);
        assert_eq!(w.degree(), 76);
        assert_eq!(w.fano_index(), 7);
    }

    #[test]
    fn canonicalize_rejects_bad_input() {
        assert!(WeightSystem::canonicalize([5, 7, 8, 9], 0).is_err());
        assert!(WeightSystem::canonicalize([0, 1, 2, 3], 6).is_err());
    }

    #[test]
    fn fano_index_examples() {
        assert_eq!(ws([2, 3, 4, 5], 12).fano_index(), 2);
        assert_eq!(ws([1, 1, 1, 1], 3).fano_index(), 1);
        assert_eq!(ws([3, 4, 5, 7], 17).fano_index(), 2);
        // Negative index is representable.
        assert_eq!(ws([1, 1, 1, 1], 9).fano_index(), -5);
    }

    #[test]
    fn anticanonical_degree_examples() {
        assert_eq!(
            ws([1, 1, 1, 1], 3).anticanonical_degree().unwrap(),
            BigRational::from(BigInt::from(3))
        );
        assert_eq!(
            ws([3, 4, 5, 7], 17).anticanonical_degree().unwrap(),
            BigRational::new(BigInt::from(17), BigInt::from(105))
        );
        assert!(ws([1, 1, 2, 3], 6).anticanonical_degree().unwrap().is_one());
        assert!(ws([1, 1, 1, 1], 4).anticanonical_degree().is_err());
    }

    #[test]
    fn rational_rendering() {
        let q = BigRational::new(BigInt::from(4 * 17), BigInt::from(420));
        assert_eq!(rational_string(&q), "17/105");
        assert_eq!(rational_string(&BigRational::from(BigInt::from(3))), "3");
    }

    #[test]
    fn rational_wrapper_round_trips() {
        let q = Rational::new(-9, 28);
        assert_eq!(q.to_string(), "-9/28");
        assert_eq!(serde_json::to_string(&q).unwrap(), "\"-9/28\"");
        let back: Rational = serde_json::from_str("\"-9/28\"").unwrap();
        assert_eq!(back, q);
        assert_eq!("17".parse::<Rational>().unwrap(), Rational::from(17));
        assert_eq!("34/4".parse::<Rational>().unwrap(), Rational::new(17, 2));
        assert!("3/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }
}
