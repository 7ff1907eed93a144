//! Placement of a weight system in the classification: special type
//! (degenerate, Yau, Yu, Boyer), infinite-series member, sporadic case,
//! or unlisted.
//!
//! For a del Pezzo hypersurface of index `I` in `P(a0,a1,a2,a3)`:
//!
//! - Yau type: `I = a_i + a_j` for distinct indices `i`, `j`;
//! - Yu type: `I = a_i + a_j/2` for distinct indices with `a_j` even;
//! - Boyer type: the weights are `(I-k, I+k, a, a+k)` as a multiset with
//!   `0 <= k < I` and `a >= I+k`; the degree is then automatically
//!   `2a+k+I`. When the equations hold but `a < I+k` the match is
//!   reported as a Boyer pattern rather than the Boyer type proper.
//!
//! Every well-formed quasismooth non-degenerate del Pezzo hypersurface
//! is of Yau, Yu, or Boyer type, or belongs to the golden series and
//! sporadic tables; the `unlisted` flag records a failure of that
//! trichotomy and is expected to stay false.

use serde::{Deserialize, Serialize};

use crate::criteria::{is_degenerate, is_quasismooth_generic, is_well_formed};
use crate::golden;
use crate::series::SeriesMatch;
use crate::weights::WeightSystem;
use crate::{Result, WpsError};

/// A special-type hit, with its witness indices or parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialType {
    /// `d` equals one of the weights.
    Degenerate,
    /// `I = a_i + a_j`, `i != j`.
    Yau { i: usize, j: usize },
    /// `I = a_i + a_j/2`, `i != j`, `a_j` even.
    Yu { i: usize, j: usize },
    /// Weights `(I-k, I+k, a, a+k)` with `0 <= k < I` and `a >= I+k`.
    Boyer { index: i64, k: u64, a: u64 },
    /// The Boyer equations hold but `a < I+k`.
    BoyerPattern { index: i64, k: u64, a: u64 },
}

impl std::fmt::Display for SpecialType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpecialType::Degenerate => write!(f, "degenerate"),
            SpecialType::Yau { i, j } => write!(f, "yau({i},{j})"),
            SpecialType::Yu { i, j } => write!(f, "yu({i},{j})"),
            SpecialType::Boyer { index, k, a } => write!(f, "boyer(I={index},k={k},a={a})"),
            SpecialType::BoyerPattern { index, k, a } => {
                write!(f, "boyer-pattern(I={index},k={k},a={a})")
            }
        }
    }
}

/// A sporadic-table hit: which golden source lists the quintuple, and
/// under which catalog label (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SporadicHit {
    pub source: String,
    pub tag: String,
}

/// Full classification outcome. All matches are retained: a quintuple
/// may be special and also appear in series and sporadic lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceClass {
    pub special: Option<SpecialType>,
    pub series_matches: Vec<SeriesMatch>,
    pub sporadic_sources: Vec<SporadicHit>,
    /// True exactly when all three of the above are empty.
    pub unlisted: bool,
}

/// All index pairs `(i, j)`, `i < j`, with `a_i + a_j = I`.
pub fn yau_witnesses(ws: &WeightSystem) -> Vec<(usize, usize)> {
    let a = ws.weights();
    let index = ws.fano_index();
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            if a[i] as i64 + a[j] as i64 == index {
                out.push((i, j));
            }
        }
    }
    out
}

/// All ordered index pairs `(i, j)`, `i != j`, with `a_j` even and
/// `a_i + a_j/2 = I`.
pub fn yu_witnesses(ws: &WeightSystem) -> Vec<(usize, usize)> {
    let a = ws.weights();
    let index = ws.fano_index();
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j && a[j].is_multiple_of(2) && a[i] as i64 + (a[j] / 2) as i64 == index {
                out.push((i, j));
            }
        }
    }
    out
}

/// First `(I, k, a)` with weights `(I-k, I+k, a, a+k)` as a multiset,
/// `0 <= k < I`, `d = 2a+k+I`, and `a >= I+k`.
pub fn boyer_witness(ws: &WeightSystem) -> Option<(i64, u64, u64)> {
    boyer_solutions(ws)
        .into_iter()
        .find(|&(i, k, a)| a >= (i as u64) + k)
}

/// First `(I, k, a)` satisfying the Boyer equations with any `a >= 1`.
pub fn boyer_pattern_witness(ws: &WeightSystem) -> Option<(i64, u64, u64)> {
    boyer_solutions(ws).into_iter().next()
}

/// All `(I, k, a)` solving the Boyer equations, in deterministic pair
/// order. The degree equation `d = 2a+k+I` is implied by `I` being the
/// index, so only the multiset pattern is checked.
fn boyer_solutions(ws: &WeightSystem) -> Vec<(i64, u64, u64)> {
    let w = ws.weights();
    let index = ws.fano_index();
    if index <= 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for p in 0..4 {
        for q in p + 1..4 {
            if (w[p] + w[q]) as i64 != 2 * index {
                continue;
            }
            let k = (w[q] - w[p]) / 2;
            if k as i64 >= index {
                continue;
            }
            let rest: Vec<u64> = (0..4).filter(|&e| e != p && e != q).map(|e| w[e]).collect();
            let (u, v) = (rest[0].min(rest[1]), rest[0].max(rest[1]));
            if v - u == k {
                debug_assert_eq!(
                    ws.degree() as i64,
                    2 * u as i64 + k as i64 + index,
                    "degree equation must follow from the pattern"
                );
                out.push((index, k, u));
            }
        }
    }
    out
}

/// First special-type hit in the precedence order degenerate, Yau, Yu,
/// Boyer, Boyer pattern; `None` when the surface is none of these.
pub fn classify_special_type(ws: &WeightSystem) -> Result<Option<SpecialType>> {
    if ws.fano_index() <= 0 {
        return Err(WpsError::Domain(format!(
            "special types are defined for del Pezzo surfaces, {ws} has index {}",
            ws.fano_index()
        )));
    }
    if is_degenerate(ws) {
        return Ok(Some(SpecialType::Degenerate));
    }
    if let Some(&(i, j)) = yau_witnesses(ws).first() {
        return Ok(Some(SpecialType::Yau { i, j }));
    }
    if let Some(&(i, j)) = yu_witnesses(ws).first() {
        return Ok(Some(SpecialType::Yu { i, j }));
    }
    if let Some((index, k, a)) = boyer_witness(ws) {
        return Ok(Some(SpecialType::Boyer { index, k, a }));
    }
    if let Some((index, k, a)) = boyer_pattern_witness(ws) {
        return Ok(Some(SpecialType::BoyerPattern { index, k, a }));
    }
    Ok(None)
}

/// All series families (across all golden sources) instantiating to
/// `ws`, with the recovered parameter values.
pub fn match_series(ws: &WeightSystem) -> Result<Vec<SeriesMatch>> {
    let mut out = Vec::new();
    for source in golden::all_sources()? {
        for family in &source.series {
            for params in family.solve(ws) {
                out.push(SeriesMatch {
                    source: source.name.clone(),
                    family_id: family.family_id(),
                    params: family
                        .params
                        .iter()
                        .cloned()
                        .zip(params.iter().copied())
                        .collect(),
                });
            }
        }
    }
    Ok(out)
}

/// All sporadic-table rows equal to `ws`, across all golden sources.
pub fn lookup_sporadic(ws: &WeightSystem) -> Result<Vec<SporadicHit>> {
    let mut out = Vec::new();
    for source in golden::all_sources()? {
        for entry in &source.sporadics {
            if entry.ws == *ws {
                out.push(SporadicHit {
                    source: source.name.clone(),
                    tag: entry.tag.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Classify a well-formed quasismooth del Pezzo weight system. Errors
/// when a precondition fails; use the sub-operations directly for
/// systems outside that domain.
pub fn classify(ws: &WeightSystem) -> Result<SurfaceClass> {
    if ws.fano_index() <= 0 {
        return Err(WpsError::Domain(format!(
            "classification requires a positive index, {ws} has {}",
            ws.fano_index()
        )));
    }
    let wf = is_well_formed(ws);
    if !wf.verdict {
        return Err(WpsError::Domain(format!(
            "classification requires well-formedness, {ws} fails: {wf:?}"
        )));
    }
    let qs = is_quasismooth_generic(ws);
    if !qs.verdict {
        return Err(WpsError::Domain(format!(
            "classification requires quasismoothness, {ws} fails on subsets {:?}",
            qs.subset_failures
        )));
    }
    classify_unchecked(ws)
}

/// The classification sub-operations without precondition checks; used
/// for advisory output on arbitrary inputs.
pub(crate) fn classify_unchecked(ws: &WeightSystem) -> Result<SurfaceClass> {
    let special = if ws.fano_index() > 0 {
        classify_special_type(ws)?
    } else {
        None
    };
    let series_matches = match_series(ws)?;
    let sporadic_sources = lookup_sporadic(ws)?;
    let unlisted = special.is_none() && series_matches.is_empty() && sporadic_sources.is_empty();
    Ok(SurfaceClass {
        special,
        series_matches,
        sporadic_sources,
        unlisted,
    })
}
