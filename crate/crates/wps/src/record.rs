//! One-stop classification record for a weight system.
//!
//! A `ClassifiedRecord` bundles every per-surface computation the library
//! offers: the well-formedness and quasismoothness reports, the degenerate
//! flag, the special-type/series/sporadic classification, the metric
//! obstructions, and the orbifold invariants. The record is built for an
//! arbitrary weight system; fields whose mathematical preconditions fail
//! are represented honestly rather than fabricated:
//!
//! * `class` is always present but advisory: for inputs that are not
//!   well-formed quasismooth del Pezzo systems it merely reports which
//!   patterns and catalog entries the quintuple matches syntactically.
//! * `obstructions` is present exactly when the index is positive, since
//!   the Bishop and Lichnerowicz inequalities compare quantities that are
//!   only defined for Fano systems.
//! * `invariants` is present exactly when the surface is a well-formed
//!   quasismooth non-degenerate del Pezzo hypersurface, the domain on
//!   which the singularity atlas and Kaehler-Einstein bookkeeping are
//!   meaningful.

use serde::{Deserialize, Serialize};

use crate::classify::{classify_unchecked, SurfaceClass};
use crate::criteria::{
    is_degenerate, is_quasismooth_generic, is_well_formed, QuasismoothReport, WellFormedReport,
};
use crate::invariants::{orbifold_invariants, OrbifoldInvariants};
use crate::obstructions::{obstruction_report, ObstructionReport};
use crate::weights::WeightSystem;
use crate::Result;

/// Everything the library can say about one weight system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedRecord {
    /// The (sorted) weight system the record describes.
    pub weight_system: WeightSystem,
    /// Fano index `I = a0 + a1 + a2 + a3 - d`; recomputable from
    /// `weight_system` and stored for direct serialization.
    pub index: i64,
    /// Well-formedness verdict with the first failing pair or triple.
    pub well_formed: WellFormedReport,
    /// Quasismoothness verdict with all failing coordinate subsets.
    pub quasismooth: QuasismoothReport,
    /// Whether the degree equals one of the weights (a cone, excluded
    /// from the classification lists).
    pub degenerate: bool,
    /// Special-type and catalog matches; advisory for non del Pezzo input.
    pub class: SurfaceClass,
    /// Bishop and Lichnerowicz obstructions; `None` when the index is
    /// not positive.
    pub obstructions: Option<ObstructionReport>,
    /// Singularity atlas, degree, and Kaehler-Einstein status; `None`
    /// unless the surface is a well-formed quasismooth non-degenerate
    /// del Pezzo hypersurface.
    pub invariants: Option<OrbifoldInvariants>,
}

impl ClassifiedRecord {
    /// Run every classification and verification operation on `ws` and
    /// collect the results.
    pub fn build(ws: &WeightSystem) -> Result<Self> {
        let well_formed = is_well_formed(ws);
        let quasismooth = is_quasismooth_generic(ws);
        let degenerate = is_degenerate(ws);
        let class = classify_unchecked(ws)?;
        let obstructions = if ws.is_fano() {
            Some(obstruction_report(ws, 3)?)
        } else {
            None
        };
        let invariants =
            if well_formed.verdict && quasismooth.verdict && !degenerate && ws.is_fano() {
                Some(orbifold_invariants(ws)?)
            } else {
                None
            };
        let record = ClassifiedRecord {
            weight_system: *ws,
            index: ws.fano_index(),
            well_formed,
            quasismooth,
            degenerate,
            class,
            obstructions,
            invariants,
        };
        debug_assert_eq!(record.index, record.weight_system.fano_index());
        Ok(record)
    }

    /// Whether the system belongs to the classification domain: a
    /// well-formed quasismooth del Pezzo hypersurface (degenerate ones
    /// included; they carry their own flag).
    pub fn is_del_pezzo(&self) -> bool {
        self.well_formed.verdict && self.quasismooth.verdict && self.index > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::SpecialType;
    use crate::invariants::KeStatus;

    fn record(raw: [u64; 4], d: u64) -> ClassifiedRecord {
        let ws = WeightSystem::canonicalize(raw, d).unwrap();
        ClassifiedRecord::build(&ws).unwrap()
    }

    #[test]
    fn del_pezzo_record_has_all_sections() {
        let r = record([3, 4, 5, 7], 17);
        assert_eq!(r.index, 2);
        assert!(r.well_formed.verdict);
        assert!(r.quasismooth.verdict);
        assert!(!r.degenerate);
        assert!(r.is_del_pezzo());
        assert_eq!(r.class.special, None);
        assert!(!r.class.series_matches.is_empty());
        assert!(r
            .class
            .sporadic_sources
            .iter()
            .any(|hit| hit.source == "thm-i2"));
        let obs = r.obstructions.as_ref().unwrap();
        assert!(!obs.bishop);
        assert!(!obs.lichnerowicz);
        let inv = r.invariants.as_ref().unwrap();
        assert_eq!(inv.singularities.len(), 4);
        assert_eq!(inv.ke_status.status, KeStatus::Exists);
    }

    #[test]
    fn non_fano_record_omits_metric_sections() {
        let r = record([1, 1, 1, 1], 9);
        assert_eq!(r.index, -5);
        assert!(r.well_formed.verdict);
        assert!(r.quasismooth.verdict);
        assert!(!r.is_del_pezzo());
        assert!(r.class.unlisted);
        assert!(r.obstructions.is_none());
        assert!(r.invariants.is_none());
    }

    #[test]
    fn degenerate_record_keeps_obstructions_only() {
        let r = record([1, 1, 2, 2], 2);
        assert_eq!(r.index, 4);
        assert!(r.degenerate);
        assert_eq!(r.class.special, Some(SpecialType::Degenerate));
        let obs = r.obstructions.as_ref().unwrap();
        assert!(obs.bishop);
        assert!(r.invariants.is_none());
    }

    #[test]
    fn record_round_trips_through_json() {
        for (raw, d) in [([3, 4, 5, 7], 17), ([1, 1, 1, 1], 9), ([1, 1, 2, 2], 2)] {
            let r = record(raw, d);
            let text = serde_json::to_string(&r).unwrap();
            let back: ClassifiedRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
        }
    }
}
