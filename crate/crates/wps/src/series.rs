//! Infinite series of weight systems, stored declaratively.
//!
//! A series family gives the four weights, the degree, and the index as
//! affine integer forms in one or two parameters, together with a lower
//! bound per parameter. Examples: `(2, 2n+1, 2n+1, 4n+1; d = 8n+4)` for
//! `n >= 1`, or the two-parameter family `(1, 1, s, r; d = s+r)`.
//!
//! Families are parsed from the golden data files (see [`crate::golden`]),
//! can be instantiated for all parameter values keeping the largest weight
//! under a bound, and can be solved against a concrete weight system to
//! recover the parameter values, trying every assignment of the weight
//! multiset to the four forms.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::weights::WeightSystem;
use crate::{Result, WpsError};

/// An affine integer form `constant + sum(coeffs[i] * param[i])` over the
/// parameter list of the owning family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineForm {
    pub constant: i64,
    pub coeffs: Vec<i64>,
}

impl AffineForm {
    fn zero(nparams: usize) -> Self {
        AffineForm {
            constant: 0,
            coeffs: vec![0; nparams],
        }
    }

    /// Evaluate at the given parameter values.
    pub fn eval(&self, params: &[i64]) -> i64 {
        debug_assert_eq!(params.len(), self.coeffs.len());
        self.constant
            + self
                .coeffs
                .iter()
                .zip(params)
                .map(|(c, p)| c * p)
                .sum::<i64>()
    }

    /// Parse a form like `3`, `m`, `2n+1`, `56n-22`, or `s+r` against the
    /// given parameter names.
    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(WpsError::Data("empty affine form".into()));
        }
        let mut form = AffineForm::zero(names.len());
        let mut rest = compact.as_str();
        let mut sign = 1i64;
        if let Some(tail) = rest.strip_prefix('-') {
            sign = -1;
            rest = tail;
        }
        for piece in rest.split_inclusive(['+', '-']) {
            let (term, next_sign) = match piece.strip_suffix('+') {
                Some(t) => (t, 1),
                None => match piece.strip_suffix('-') {
                    Some(t) => (t, -1),
                    None => (piece, 0),
                },
            };
            parse_term(term, sign, names, &mut form)?;
            sign = next_sign;
        }
        Ok(form)
    }

    /// Render with the given parameter names: `2n+1`, `s+r`, `3`, `56n-22`.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (c, name) in self.coeffs.iter().zip(names) {
            match *c {
                0 => continue,
                1 if out.is_empty() => out.push_str(name),
                -1 if out.is_empty() => {
                    out.push('-');
                    out.push_str(name);
                }
                c if out.is_empty() => out.push_str(&format!("{c}{name}")),
                1 => out.push_str(&format!("+{name}")),
                -1 => out.push_str(&format!("-{name}")),
                c if c > 0 => out.push_str(&format!("+{c}{name}")),
                c => out.push_str(&format!("{c}{name}")),
            }
        }
        if self.constant != 0 || out.is_empty() {
            if self.constant >= 0 && !out.is_empty() {
                out.push('+');
            }
            out.push_str(&self.constant.to_string());
        }
        out
    }
}

fn parse_term(term: &str, sign: i64, names: &[String], form: &mut AffineForm) -> Result<()> {
    if term.is_empty() {
        return Err(WpsError::Data("dangling sign in affine form".into()));
    }
    let digits_end = term
        .char_indices()
        .find(|(_, c)| !c.is_ascii_digit())
        .map_or(term.len(), |(i, _)| i);
    let (digits, mut symbol) = term.split_at(digits_end);
    symbol = symbol.strip_prefix('*').unwrap_or(symbol);
    let coef: i64 = if digits.is_empty() {
        1
    } else {
        digits
            .parse()
            .map_err(|_| WpsError::Data(format!("bad coefficient in term '{term}'")))?
    };
    if symbol.is_empty() {
        if digits.is_empty() {
            return Err(WpsError::Data(format!("bare sign or '*' in term '{term}'")));
        }
        form.constant += sign * coef;
    } else {
        let slot = names
            .iter()
            .position(|n| n == symbol)
            .ok_or_else(|| WpsError::Data(format!("unknown parameter '{symbol}'")))?;
        form.coeffs[slot] += sign * coef;
    }
    Ok(())
}

/// A one- or two-parameter family of weight systems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesFamily {
    /// Which golden source lists this family (e.g. `table-1`).
    pub source: String,
    /// Row label carried through from the source table; may be empty.
    pub tag: String,
    /// Parameter names in declaration order.
    pub params: Vec<String>,
    /// Inclusive lower bound per parameter.
    pub lower_bounds: Vec<i64>,
    pub weight_exprs: [AffineForm; 4],
    pub degree_expr: AffineForm,
    pub index_expr: AffineForm,
}

/// A successful series match: the family, and the parameter values that
/// instantiate it to the queried weight system.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeriesMatch {
    pub source: String,
    pub family_id: String,
    /// `(parameter name, value)` pairs in the family's declaration order.
    pub params: Vec<(String, i64)>,
}

impl SeriesFamily {
    /// Canonical identifier: the weight forms joined by commas, then the
    /// degree form, e.g. `3,3m+1,3m+2,6m+1 / d=12m+5`.
    pub fn family_id(&self) -> String {
        let weights: Vec<String> = self
            .weight_exprs
            .iter()
            .map(|e| e.render(&self.params))
            .collect();
        format!(
            "{} / d={}",
            weights.join(","),
            self.degree_expr.render(&self.params)
        )
    }

    /// Structural checks run when loading golden data: the index form must
    /// equal (sum of weights) - degree identically, weight forms must be
    /// nondecreasing in every parameter, and every parameter must occur in
    /// some weight (so bounded instantiation terminates).
    pub fn validate(&self) -> Result<()> {
        let id = self.family_id();
        if self.params.is_empty() || self.params.len() > 2 {
            return Err(WpsError::Data(format!(
                "family {id}: expected 1 or 2 parameters"
            )));
        }
        let sum_const: i64 = self.weight_exprs.iter().map(|e| e.constant).sum();
        if sum_const - self.degree_expr.constant != self.index_expr.constant {
            return Err(WpsError::Data(format!(
                "family {id}: index constant does not equal weight sum minus degree"
            )));
        }
        for slot in 0..self.params.len() {
            let sum_coef: i64 = self.weight_exprs.iter().map(|e| e.coeffs[slot]).sum();
            if sum_coef - self.degree_expr.coeffs[slot] != self.index_expr.coeffs[slot] {
                return Err(WpsError::Data(format!(
                    "family {id}: index coefficient mismatch on '{}'",
                    self.params[slot]
                )));
            }
            if self.weight_exprs.iter().any(|e| e.coeffs[slot] < 0) {
                return Err(WpsError::Data(format!(
                    "family {id}: weight decreasing in '{}'",
                    self.params[slot]
                )));
            }
            if self.weight_exprs.iter().all(|e| e.coeffs[slot] == 0) {
                return Err(WpsError::Data(format!(
                    "family {id}: parameter '{}' unused in weights",
                    self.params[slot]
                )));
            }
        }
        Ok(())
    }

    /// Instantiate at the given parameter values.
    pub fn instantiate(&self, params: &[i64]) -> Result<WeightSystem> {
        let mut raw = [0u64; 4];
        for (slot, expr) in self.weight_exprs.iter().enumerate() {
            let w = expr.eval(params);
            if w <= 0 {
                return Err(WpsError::Domain(format!(
                    "family {} at {params:?}: nonpositive weight {w}",
                    self.family_id()
                )));
            }
            raw[slot] = w as u64;
        }
        let d = self.degree_expr.eval(params);
        if d <= 0 {
            return Err(WpsError::Domain(format!(
                "family {} at {params:?}: nonpositive degree {d}",
                self.family_id()
            )));
        }
        let ws = WeightSystem::canonicalize(raw, d as u64)?;
        debug_assert_eq!(ws.fano_index(), self.index_expr.eval(params));
        Ok(ws)
    }

    /// All instances whose largest weight stays within `max_weight`,
    /// together with their parameter values, in increasing parameter order.
    pub fn instances_within(&self, max_weight: u64) -> Vec<(Vec<i64>, WeightSystem)> {
        let mut out = Vec::new();
        match self.params.len() {
            1 => {
                let mut p = self.lower_bounds[0];
                while let Some(ws) = self.in_bound(&[p], max_weight) {
                    out.push((vec![p], ws));
                    p += 1;
                }
            }
            2 => {
                let mut s = self.lower_bounds[0];
                loop {
                    let mut r = self.lower_bounds[1];
                    let mut any = false;
                    while let Some(ws) = self.in_bound(&[s, r], max_weight) {
                        out.push((vec![s, r], ws));
                        any = true;
                        r += 1;
                    }
                    if !any {
                        break;
                    }
                    s += 1;
                }
            }
            _ => unreachable!("validated: 1 or 2 parameters"),
        }
        out
    }

    fn in_bound(&self, params: &[i64], max_weight: u64) -> Option<WeightSystem> {
        let ws = self.instantiate(params).ok()?;
        (ws.weights()[3] <= max_weight).then_some(ws)
    }

    /// All in-domain parameter vectors whose instantiation equals `ws`,
    /// trying every assignment of the weight multiset to the four forms.
    pub fn solve(&self, ws: &WeightSystem) -> Vec<Vec<i64>> {
        let w = ws.weights();
        let d = ws.degree() as i64;
        let mut found = BTreeSet::new();
        for perm in permutations4() {
            let mut eqs: Vec<(&AffineForm, i64)> = self
                .weight_exprs
                .iter()
                .zip(perm)
                .map(|(expr, slot)| (expr, w[slot] as i64))
                .collect();
            eqs.push((&self.degree_expr, d));
            if let Some(params) = solve_affine(&eqs, self.params.len()) {
                if params.iter().zip(&self.lower_bounds).all(|(p, lb)| p >= lb) {
                    found.insert(params);
                }
            }
        }
        found.into_iter().collect()
    }
}

/// Solve `expr(params) = value` for all equations simultaneously over the
/// integers; `None` when inconsistent, non-integral, or underdetermined.
fn solve_affine(eqs: &[(&AffineForm, i64)], nparams: usize) -> Option<Vec<i64>> {
    let check = |params: &[i64]| eqs.iter().all(|(e, v)| e.eval(params) == *v);
    match nparams {
        1 => {
            let (e, v) = eqs.iter().find(|(e, _)| e.coeffs[0] != 0)?;
            let rhs = v - e.constant;
            (rhs % e.coeffs[0] == 0 && check(&[rhs / e.coeffs[0]])).then(|| vec![rhs / e.coeffs[0]])
        }
        2 => {
            for (i, (ei, vi)) in eqs.iter().enumerate() {
                for (ej, vj) in &eqs[i + 1..] {
                    let (a, b) = (ei.coeffs[0], ei.coeffs[1]);
                    let (c, dd) = (ej.coeffs[0], ej.coeffs[1]);
                    let det = a * dd - b * c;
                    if det == 0 {
                        continue;
                    }
                    let (ri, rj) = (vi - ei.constant, vj - ej.constant);
                    let (pn, qn) = (ri * dd - rj * b, a * rj - c * ri);
                    if pn % det != 0 || qn % det != 0 {
                        return None;
                    }
                    let params = vec![pn / det, qn / det];
                    return check(&params).then_some(params);
                }
            }
            None
        }
        _ => unreachable!("validated: 1 or 2 parameters"),
    }
}

/// The 24 permutations of `[0, 1, 2, 3]`.
fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    if i != j && i != k && i != l && j != k && j != l && k != l {
                        out.push([i, j, k, l]);
                    }
                }
            }
        }
    }
    out
}

/// Parse one `series:` line body (after the prefix): five `|`-separated
/// sections `weights | d=expr | I=expr | bounds | tag`, the tag optional.
pub(crate) fn parse_series_line(body: &str, source: &str) -> Result<SeriesFamily> {
    let sections: Vec<&str> = body.split('|').map(str::trim).collect();
    if sections.len() < 4 || sections.len() > 5 {
        return Err(WpsError::Data(format!(
            "series line needs 4 or 5 '|' sections, got {}: '{body}'",
            sections.len()
        )));
    }
    let mut params = Vec::new();
    let mut lower_bounds = Vec::new();
    for clause in sections[3].split(',') {
        let (name, bound) = clause.split_once(">=").ok_or_else(|| {
            WpsError::Data(format!("domain clause '{clause}' is not 'param>=bound'"))
        })?;
        params.push(name.trim().to_string());
        lower_bounds.push(
            bound
                .trim()
                .parse()
                .map_err(|_| WpsError::Data(format!("bad bound in '{clause}'")))?,
        );
    }

    let weight_texts: Vec<&str> = sections[0].split(',').map(str::trim).collect();
    if weight_texts.len() != 4 {
        return Err(WpsError::Data(format!(
            "expected 4 weight forms, got {}: '{}'",
            weight_texts.len(),
            sections[0]
        )));
    }
    let parse = |text: &str| AffineForm::parse(text, &params);
    let weight_exprs = [
        parse(weight_texts[0])?,
        parse(weight_texts[1])?,
        parse(weight_texts[2])?,
        parse(weight_texts[3])?,
    ];
    let degree_expr = parse(sections[1].strip_prefix("d=").ok_or_else(|| {
        WpsError::Data(format!(
            "degree section must start with 'd=': '{}'",
            sections[1]
        ))
    })?)?;
    let index_expr = parse(sections[2].strip_prefix("I=").ok_or_else(|| {
        WpsError::Data(format!(
            "index section must start with 'I=': '{}'",
            sections[2]
        ))
    })?)?;

    let family = SeriesFamily {
        source: source.to_string(),
        tag: sections.get(4).map_or(String::new(), |t| t.to_string()),
        params,
        lower_bounds,
        weight_exprs,
        degree_expr,
        index_expr,
    };
    family.validate()?;
    Ok(family)
}
