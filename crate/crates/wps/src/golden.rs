//! Embedded golden classification data and its loader.
//!
//! Five sources are shipped with the crate, one structured text file
//! each: `thm-kollar-johnson` (index 1), `thm-i2` (index 2), `thm-bgn`
//! (index at least 2 with `I < 3*a0/2`, Boyer-type excluded), and the
//! trichotomy tables `table-1` (one-parameter series) and `table-2`
//! (sporadic cases).
//!
//! File format, one record per line, `#` comments and blank lines
//! ignored:
//!
//! - sporadic row: `a0,a1,a2,a3,d,I` with an optional trailing `,label`;
//! - series row: `series: w0, w1, w2, w3 | d=expr | I=expr | bounds`
//!   with an optional trailing `| label` (see [`crate::series`]).
//!
//! The environment variable `WPS_GOLDEN_DIR` overrides the embedded
//! data: when set, the five files are read from that directory instead.
//! Every loaded row is validated: the index column must equal the weight
//! sum minus the degree, weights must be sorted, and series index forms
//! must be consistent with the weight and degree forms.

use std::sync::OnceLock;

use crate::series::{parse_series_line, SeriesFamily};
use crate::weights::WeightSystem;
use crate::{Result, WpsError};

/// Names of the five golden sources, in canonical order.
pub const SOURCE_NAMES: [&str; 5] = [
    "thm-kollar-johnson",
    "thm-i2",
    "thm-bgn",
    "table-1",
    "table-2",
];

const EMBEDDED: [(&str, &str); 5] = [
    (
        "thm-kollar-johnson",
        include_str!("../golden/thm-kollar-johnson.txt"),
    ),
    ("thm-i2", include_str!("../golden/thm-i2.txt")),
    ("thm-bgn", include_str!("../golden/thm-bgn.txt")),
    ("table-1", include_str!("../golden/table-1.txt")),
    ("table-2", include_str!("../golden/table-2.txt")),
];

/// One sporadic quintuple from a golden source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SporadicEntry {
    pub ws: WeightSystem,
    pub index: i64,
    /// Catalog label carried through from the source table; may be empty.
    pub tag: String,
}

/// A parsed golden source: its sporadic rows and series families.
#[derive(Clone, Debug)]
pub struct GoldenSource {
    pub name: String,
    pub sporadics: Vec<SporadicEntry>,
    pub series: Vec<SeriesFamily>,
}

/// All five golden sources, parsed once and cached for the process
/// lifetime. Honors `WPS_GOLDEN_DIR` on first access.
pub fn all_sources() -> Result<&'static [GoldenSource]> {
    static CACHE: OnceLock<std::result::Result<Vec<GoldenSource>, String>> = OnceLock::new();
    CACHE
        .get_or_init(load_all)
        .as_ref()
        .map(Vec::as_slice)
        .map_err(|e| WpsError::Data(e.clone()))
}

/// Look up one golden source by name.
pub fn source(name: &str) -> Result<&'static GoldenSource> {
    all_sources()?
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| {
            WpsError::InvalidInput(format!(
                "unknown golden source '{name}', expected one of {SOURCE_NAMES:?}"
            ))
        })
}

fn load_all() -> std::result::Result<Vec<GoldenSource>, String> {
    let dir = std::env::var("WPS_GOLDEN_DIR").ok();
    EMBEDDED
        .iter()
        .map(|(name, embedded)| {
            let text = match &dir {
                Some(dir) => {
                    let path = std::path::Path::new(dir).join(format!("{name}.txt"));
                    std::fs::read_to_string(&path)
                        .map_err(|e| format!("reading {}: {e}", path.display()))?
                }
                None => (*embedded).to_string(),
            };
            parse_source(name, &text).map_err(|e| format!("{name}: {e}"))
        })
        .collect()
}

fn parse_source(name: &str, text: &str) -> Result<GoldenSource> {
    let mut sporadics = Vec::new();
    let mut series = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |e: WpsError| WpsError::Data(format!("line {}: {e}", lineno + 1));
        if let Some(body) = line.strip_prefix("series:") {
            series.push(parse_series_line(body, name).map_err(at)?);
        } else {
            sporadics.push(parse_sporadic_line(line).map_err(at)?);
        }
    }
    Ok(GoldenSource {
        name: name.to_string(),
        sporadics,
        series,
    })
}

fn parse_sporadic_line(line: &str) -> Result<SporadicEntry> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    if fields.len() < 6 || fields.len() > 7 {
        return Err(WpsError::Data(format!(
            "sporadic row needs 6 integers and an optional label, got {} fields",
            fields.len()
        )));
    }
    let int = |text: &str| -> Result<i64> {
        text.parse()
            .map_err(|_| WpsError::Data(format!("bad integer '{text}'")))
    };
    let mut nums = [0i64; 6];
    for (slot, field) in fields[..6].iter().enumerate() {
        nums[slot] = int(field)?;
    }
    let [a0, a1, a2, a3, d, index] = nums;
    if !(1 <= a0 && a0 <= a1 && a1 <= a2 && a2 <= a3) {
        return Err(WpsError::Data(format!(
            "weights must be positive and sorted: {a0},{a1},{a2},{a3}"
        )));
    }
    if d < 1 {
        return Err(WpsError::Data(format!("degree must be positive: {d}")));
    }
    let ws = WeightSystem::canonicalize([a0 as u64, a1 as u64, a2 as u64, a3 as u64], d as u64)?;
    if ws.fano_index() != index {
        return Err(WpsError::Data(format!(
            "index column {index} does not match weight sum minus degree {} for {ws}",
            ws.fano_index()
        )));
    }
    Ok(SporadicEntry {
        ws,
        index,
        tag: fields.get(6).map_or(String::new(), |t| t.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_sources_parse_and_have_expected_sizes() {
        let sources = all_sources().unwrap();
        assert_eq!(sources.len(), 5);
        let by_name = |name: &str| sources.iter().find(|s| s.name == name).unwrap();

        let kj = by_name("thm-kollar-johnson");
        assert_eq!(kj.sporadics.len(), 22);
        assert_eq!(kj.series.len(), 1);
        assert!(kj.sporadics.iter().all(|e| e.index == 1));

        let i2 = by_name("thm-i2");
        assert_eq!(i2.sporadics.len(), 34);
        assert_eq!(i2.series.len(), 11);
        assert!(i2.sporadics.iter().all(|e| e.index == 2));
        assert_eq!(i2.series.iter().filter(|f| f.params.len() == 2).count(), 1);

        let bgn = by_name("thm-bgn");
        assert_eq!(bgn.sporadics.len(), 53);
        assert_eq!(bgn.series.len(), 12);
        assert!(bgn.sporadics.iter().all(|e| (2..=10).contains(&e.index)));

        let t1 = by_name("table-1");
        assert_eq!(t1.sporadics.len(), 0);
        assert_eq!(t1.series.len(), 35);

        let t2 = by_name("table-2");
        assert_eq!(t2.sporadics.len(), 63);
        assert!(t2.series.is_empty());
        for (index, count) in [(1, 17), (2, 25), (3, 7), (4, 8), (5, 3), (6, 2), (7, 1)] {
            assert_eq!(
                t2.sporadics.iter().filter(|e| e.index == index).count(),
                count,
                "index {index}"
            );
        }
    }

    #[test]
    fn source_lookup() {
        assert!(source("table-2").is_ok());
        assert!(source("table-3").is_err());
    }

    #[test]
    fn sporadic_line_validation() {
        assert!(parse_sporadic_line("1,2,3,4,9,1").is_ok());
        // Index column inconsistent with the weight sum minus degree.
        assert!(parse_sporadic_line("1,2,3,4,9,2").is_err());
        // Unsorted weights.
        assert!(parse_sporadic_line("2,1,3,4,9,1").is_err());
    }

    #[test]
    fn specific_rows_present() {
        let t2 = source("table-2").unwrap();
        let hit = |raw: [u64; 4], d: u64, tag: &str| {
            let ws = WeightSystem::canonicalize(raw, d).unwrap();
            assert!(
                t2.sporadics.iter().any(|e| e.ws == ws && e.tag == tag),
                "missing {ws} [{tag}]"
            );
        };
        hit([5, 14, 17, 21], 56, "XI.3(8)");
        hit([11, 13, 21, 38], 76, "X.3(1)");
        hit([13, 20, 31, 49], 111, "XIX.2(2)");
    }
}
