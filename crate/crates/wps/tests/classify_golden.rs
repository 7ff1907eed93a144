//! Consistency of the shipped classification catalogs with the deciders:
//! every cataloged quintuple must pass the criteria it is cataloged for,
//! and lookups must round-trip to their own source.

use std::collections::BTreeSet;

use wps::classify::{classify, lookup_sporadic, match_series};
use wps::criteria::{is_degenerate, is_quasismooth_generic, is_well_formed};
use wps::golden;

#[test]
fn catalog_shape_is_frozen() {
    let expected = [
        ("thm-kollar-johnson", 22, 1),
        ("thm-i2", 34, 11),
        ("thm-bgn", 53, 12),
        ("table-1", 0, 35),
        ("table-2", 63, 0),
    ];
    let sources = golden::all_sources().unwrap();
    assert_eq!(sources.len(), expected.len());
    for (source, (name, sporadics, series)) in sources.iter().zip(expected) {
        assert_eq!(source.name, name);
        assert_eq!(source.sporadics.len(), sporadics, "{name} sporadic count");
        assert_eq!(source.series.len(), series, "{name} series count");
    }
}

#[test]
fn every_sporadic_row_is_well_formed_quasismooth_and_fano() {
    for source in golden::all_sources().unwrap() {
        for entry in &source.sporadics {
            let ws = &entry.ws;
            assert!(is_well_formed(ws).verdict, "{} in {}", ws, source.name);
            assert!(
                is_quasismooth_generic(ws).verdict,
                "{} in {}",
                ws,
                source.name
            );
            assert!(!is_degenerate(ws), "{} in {}", ws, source.name);
            assert!(ws.is_fano(), "{} in {}", ws, source.name);
            assert_eq!(ws.fano_index(), entry.index, "{} in {}", ws, source.name);
        }
    }
}

#[test]
fn sporadic_lookup_round_trips_to_its_own_source() {
    for source in golden::all_sources().unwrap() {
        for entry in &source.sporadics {
            let hits = lookup_sporadic(&entry.ws).unwrap();
            assert!(
                hits.iter()
                    .any(|h| h.source == source.name && h.tag == entry.tag),
                "{} not found back in {}",
                entry.ws,
                source.name
            );
        }
    }
}

#[test]
fn series_instances_round_trip_and_pass_the_criteria() {
    for source in golden::all_sources().unwrap() {
        for family in &source.series {
            let instances = family.instances_within(130);
            assert!(
                !instances.is_empty(),
                "{} in {} has no instance below 130",
                family.family_id(),
                source.name
            );
            for (params, ws) in instances {
                assert!(
                    is_well_formed(&ws).verdict,
                    "{ws} from {}",
                    family.family_id()
                );
                assert!(
                    is_quasismooth_generic(&ws).verdict,
                    "{ws} from {}",
                    family.family_id()
                );
                let named: Vec<(String, i64)> = family
                    .params
                    .iter()
                    .cloned()
                    .zip(params.iter().copied())
                    .collect();
                let matches = match_series(&ws).unwrap();
                assert!(
                    matches.iter().any(|m| m.source == source.name
                        && m.family_id == family.family_id()
                        && m.params == named),
                    "{ws} does not round-trip to {} at {:?}",
                    family.family_id(),
                    named
                );
                // solve() is the inverse of instantiate().
                assert!(
                    family.solve(&ws).contains(&params),
                    "solve misses {params:?} for {ws}"
                );
            }
        }
    }
}

#[test]
fn classified_catalog_members_are_never_unlisted() {
    for source in golden::all_sources().unwrap() {
        for entry in &source.sporadics {
            let class = classify(&entry.ws).unwrap();
            assert!(!class.unlisted, "{} claims to be unlisted", entry.ws);
        }
    }
}

#[test]
fn no_duplicate_rows_within_a_source() {
    for source in golden::all_sources().unwrap() {
        let set: BTreeSet<_> = source.sporadics.iter().map(|e| e.ws).collect();
        assert_eq!(
            set.len(),
            source.sporadics.len(),
            "duplicate sporadic rows in {}",
            source.name
        );
    }
}
