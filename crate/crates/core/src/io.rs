//! Text, LaTeX and JSON forms of the computed tables. JSON documents carry
//! `"schema": "icanon/1"` and parse back into the same data.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canonical::{CanKind, CanTable};
use crate::hecke::{Basis, KlTable};
use crate::laurent::{LaurentPoly, RatFunc};
use crate::qtensor::{format_letter, LetterDisplay, TensorElt, TensorIndex};
use crate::weyl::{group_name, Kind, WeylElt};

/// Decoded table: each entry's index with its coefficient map.
pub type Decoded<I> = Vec<(I, BTreeMap<I, LaurentPoly>)>;

pub const SCHEMA: &str = "icanon/1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("expected schema {SCHEMA}, found {0:?}")]
    Schema(String),
    #[error("malformed document: {0}")]
    Malformed(String),
}

/// `q^{-2}` style LaTeX for a Laurent polynomial.
pub fn latex_poly(p: &LaurentPoly) -> String {
    let s = p.to_string();
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => {}
            '^' => {
                let mut exp = String::new();
                while let Some(&d) = chars.peek() {
                    if d == '-' && exp.is_empty() || d.is_ascii_digit() {
                        exp.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push_str(&format!("^{{{exp}}}"));
            }
            _ => out.push(c),
        }
    }
    out
}

/// `c X` with parentheses around multi-term coefficients.
fn scaled(c: &LaurentPoly, x: &str, poly: impl Fn(&LaurentPoly) -> String) -> String {
    if c.is_one() {
        return x.to_string();
    }
    if c == &-&LaurentPoly::one() {
        return format!("-{x}");
    }
    let body = poly(c);
    if c.terms().len() == 1 {
        format!("{body} {x}")
    } else {
        format!("({body}) {x}")
    }
}

fn join_terms(parts: Vec<String>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        match p.strip_prefix('-') {
            Some(rest) => out.push_str(&format!(" - {rest}")),
            None => out.push_str(&format!(" + {p}")),
        }
    }
    out
}

fn group_of(table: &KlTable) -> (Kind, usize) {
    match table.entries.first() {
        Some(e) => (e.index.kind(), e.index.rank()),
        None => (table.params.kind, table.params.rank),
    }
}

fn table_kind(table: &KlTable) -> &'static str {
    match (table.parabolic.is_some(), table.basis) {
        (false, Basis::C) => "kl",
        (false, Basis::L) => "dual-kl",
        (true, Basis::C) => "parabolic-kl",
        (true, Basis::L) => "parabolic-dual-kl",
    }
}

/// Terms in display order: longest element first.
fn ordered_terms(coeffs: &BTreeMap<WeylElt, LaurentPoly>) -> Vec<(&WeylElt, &LaurentPoly)> {
    let mut v: Vec<_> = coeffs.iter().collect();
    v.sort_by_key(|(w, _)| (std::cmp::Reverse(w.length()), w.reduced_word()));
    v
}

fn standard_symbol(table: &KlTable) -> &'static str {
    match (table.parabolic.is_some(), table.basis) {
        (false, _) => "H",
        (true, Basis::C) => "C_J H",
        (true, Basis::L) => "L_J H",
    }
}

pub fn kl_text(table: &KlTable) -> String {
    let (kind, rank) = group_of(table);
    let mut out = format!("# {} basis of {}", table_kind(table), group_name(kind, rank));
    if kind == Kind::B {
        out.push_str(&format!(", p = q^{}", table.params.k));
    }
    if let Some(j) = &table.parabolic {
        out.push_str(&format!(", J = {j:?}"));
    }
    out.push('\n');
    let sym = standard_symbol(table);
    for e in &table.entries {
        let parts = ordered_terms(&e.coeffs)
            .into_iter()
            .map(|(w, c)| scaled(c, &format!("{sym}_{{{}}}", w.word_string()), |p| p.to_string()))
            .collect();
        out.push_str(&format!(
            "{}_{{{}}} = {}\n",
            table.basis.letter(),
            e.index.word_string(),
            join_terms(parts)
        ));
    }
    out
}

fn latex_word(w: &WeylElt) -> String {
    let word = w.reduced_word();
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s_{i}")).collect()
}

pub fn kl_latex(table: &KlTable) -> String {
    let sym = standard_symbol(table);
    let mut out = String::from("\\begin{align*}\n");
    for e in &table.entries {
        let parts = ordered_terms(&e.coeffs)
            .into_iter()
            .map(|(w, c)| scaled(c, &format!("{sym}_{{{}}}", latex_word(w)), latex_poly))
            .collect();
        out.push_str(&format!(
            "{}_{{{}}} &= {} \\\\\n",
            table.basis.letter(),
            latex_word(&e.index),
            join_terms(parts)
        ));
    }
    out.push_str("\\end{align*}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlDocEntry {
    pub index: String,
    pub terms: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KlDoc {
    pub schema: String,
    pub kind: String,
    pub group: String,
    pub k: i32,
    pub basis: String,
    pub parabolic: Option<Vec<usize>>,
    pub entries: Vec<KlDocEntry>,
}

impl KlDoc {
    pub fn from_table(table: &KlTable) -> Self {
        let (kind, rank) = group_of(table);
        KlDoc {
            schema: SCHEMA.into(),
            kind: table_kind(table).into(),
            group: group_name(kind, rank),
            k: table.params.k,
            basis: table.basis.letter().into(),
            parabolic: table.parabolic.clone(),
            entries: table
                .entries
                .iter()
                .map(|e| KlDocEntry {
                    index: e.index.word_string(),
                    terms: e.coeffs.iter().map(|(w, c)| (w.word_string(), c.to_string())).collect(),
                })
                .collect(),
        }
    }

    /// Index and coefficient map of each entry.
    pub fn decode(&self) -> Result<Decoded<WeylElt>, IoError> {
        if self.schema != SCHEMA {
            return Err(IoError::Schema(self.schema.clone()));
        }
        let bad = |e: String| IoError::Malformed(e);
        let (kind, rank) = crate::weyl::parse_group(&self.group).map_err(|e| bad(e.to_string()))?;
        let elt = |s: &str| WeylElt::parse(kind, rank, s).map_err(|e| bad(e.to_string()));
        self.entries
            .iter()
            .map(|e| {
                let terms = e
                    .terms
                    .iter()
                    .map(|(w, c)| {
                        Ok((
                            elt(w)?,
                            c.parse().map_err(|x: crate::laurent::LaurentError| bad(x.to_string()))?,
                        ))
                    })
                    .collect::<Result<_, IoError>>()?;
                Ok((elt(&e.index)?, terms))
            })
            .collect()
    }
}

fn tensor_symbol(f: &TensorIndex, n: usize, mode: LetterDisplay, latex: bool) -> String {
    let parts: Vec<String> =
        f.0.iter()
            .map(|&x| {
                let l = format_letter(x, n, mode);
                if latex {
                    let l = match l.split_once('/') {
                        Some((a, b)) => format!("\\frac{{{}}}{{{b}}}", a),
                        None => l,
                    };
                    format!("v_{{{l}}}")
                } else {
                    format!("v{l}")
                }
            })
            .collect();
    parts.join(if latex { " \\otimes " } else { "⊗" })
}

fn elt_parts(x: &TensorElt, lead: &TensorIndex, mode: LetterDisplay, latex: bool) -> Vec<String> {
    let n = x.space().n;
    let mut terms: Vec<(&TensorIndex, &LaurentPoly)> = x.terms().iter().collect();
    terms.sort_by_key(|(f, _)| *f != lead);
    terms
        .into_iter()
        .map(|(f, c)| {
            let sym = tensor_symbol(f, n, mode, latex);
            if latex {
                scaled(c, &sym, latex_poly)
            } else {
                scaled(c, &sym, |p| p.to_string())
            }
        })
        .collect()
}

fn can_title(table: &CanTable) -> String {
    let mut s = format!("# {} basis of V^(x){} for N={}", table.kind.name(), table.space.m, table.space.n);
    if let CanKind::ICanonical(k) | CanKind::DualICanonical(k) = table.kind {
        s.push_str(&format!(", p = q^{k}"));
    }
    s
}

pub fn can_text(table: &CanTable, mode: LetterDisplay) -> String {
    let mut out = can_title(table);
    out.push('\n');
    let n = table.space.n;
    for e in &table.entries {
        out.push_str(&format!(
            "b{} = {}\n",
            e.index.display(n, mode),
            join_terms(elt_parts(&e.element, &e.index, mode, false))
        ));
    }
    out
}

pub fn can_latex(table: &CanTable, mode: LetterDisplay) -> String {
    let n = table.space.n;
    let mut out = String::from("\\begin{align*}\n");
    for e in &table.entries {
        out.push_str(&format!(
            "b_{{{}}} &= {} \\\\\n",
            tensor_symbol(&e.index, n, mode, true),
            join_terms(elt_parts(&e.element, &e.index, mode, true))
        ));
    }
    out.push_str("\\end{align*}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanDocEntry {
    /// Doubled letters, as stored.
    pub index: Vec<i32>,
    pub label: String,
    pub terms: Vec<(Vec<i32>, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanDoc {
    pub schema: String,
    pub kind: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub m: usize,
    pub k: Option<i32>,
    pub entries: Vec<CanDocEntry>,
}

impl CanDoc {
    pub fn from_table(table: &CanTable, mode: LetterDisplay) -> Self {
        let k = match table.kind {
            CanKind::ICanonical(k) | CanKind::DualICanonical(k) => Some(k),
            _ => None,
        };
        CanDoc {
            schema: SCHEMA.into(),
            kind: table.kind.name().into(),
            n: table.space.n,
            m: table.space.m,
            k,
            entries: table
                .entries
                .iter()
                .map(|e| CanDocEntry {
                    index: e.index.0.clone(),
                    label: e.index.display(table.space.n, mode),
                    terms: e.element.terms().iter().map(|(f, c)| (f.0.clone(), c.to_string())).collect(),
                })
                .collect(),
        }
    }

    /// Index and expansion of each entry.
    pub fn decode(&self) -> Result<Decoded<TensorIndex>, IoError> {
        if self.schema != SCHEMA {
            return Err(IoError::Schema(self.schema.clone()));
        }
        self.entries
            .iter()
            .map(|e| {
                let terms = e
                    .terms
                    .iter()
                    .map(|(f, c)| {
                        let c = c
                            .parse()
                            .map_err(|x: crate::laurent::LaurentError| IoError::Malformed(x.to_string()))?;
                        Ok((TensorIndex(f.clone()), c))
                    })
                    .collect::<Result<_, IoError>>()?;
                Ok((TensorIndex(e.index.clone()), terms))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiKDoc {
    pub schema: String,
    pub kind: String,
    pub k: i32,
    pub d: usize,
    /// `c_0, ..., c_d` as text; non-Laurent values are written `num / den`.
    pub coefficients: Vec<String>,
}

impl QuasiKDoc {
    pub fn new(k: i32, coeffs: &[RatFunc]) -> Self {
        QuasiKDoc {
            schema: SCHEMA.into(),
            kind: "quasi-k".into(),
            k,
            d: coeffs.len().saturating_sub(1),
            coefficients: coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("# quasi K-matrix coefficients, B = E + q F K^-1 + [{}] K^-1\n", self.k);
        for (n, c) in self.coefficients.iter().enumerate() {
            out.push_str(&format!("c_{n} = {c}\n"));
        }
        out
    }

    pub fn latex(&self) -> String {
        let mut out = String::from("\\begin{align*}\n");
        for (n, c) in self.coefficients.iter().enumerate() {
            let body = match c.parse::<LaurentPoly>() {
                Ok(p) => latex_poly(&p),
                Err(_) => c.clone(),
            };
            out.push_str(&format!("c_{{{n}}} &= {body} \\\\\n"));
        }
        out.push_str("\\end{align*}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_basis_a;
    use crate::hecke::{kl_basis, parabolic_dual_kl, HeckeParams};

    #[test]
    fn latex_polys() {
        let p: LaurentPoly = "3*q^-2 - q + q^10".parse().unwrap();
        assert_eq!(latex_poly(&p), "3q^{-2} - q + q^{10}");
    }

    #[test]
    fn kl_text_matches_notation() {
        let t = kl_basis(HeckeParams::equal(Kind::A, 3)).unwrap();
        let text = kl_text(&t);
        assert!(text.contains("C_{s1} = H_{s1} + q H_{e}"), "{text}");
        assert!(text.contains("C_{s1 s2} = H_{s1 s2} + q H_{s1} + q H_{s2} + q^2 H_{e}"), "{text}");
        assert!(kl_latex(&t).contains("C_{s_1s_2} &= H_{s_1s_2} + q H_{s_1} + q H_{s_2} + q^{2} H_{e}"));
    }

    #[test]
    fn kl_json_round_trip() {
        for t in [
            kl_basis(HeckeParams::new(Kind::B, 2, 2)).unwrap(),
            parabolic_dual_kl(HeckeParams::equal(Kind::A, 3), &[1]).unwrap(),
            crate::hecke::type_d_kl_embedding(3).unwrap(),
        ] {
            let doc = KlDoc::from_table(&t);
            let s = serde_json::to_string(&doc).unwrap();
            let back: KlDoc = serde_json::from_str(&s).unwrap();
            assert_eq!(back, doc);
            let decoded = back.decode().unwrap();
            let orig: Vec<_> = t.entries.iter().map(|e| (e.index.clone(), e.coeffs.clone())).collect();
            assert_eq!(decoded, orig);
        }
        let mut bad = KlDoc::from_table(&kl_basis(HeckeParams::equal(Kind::A, 2)).unwrap());
        bad.schema = "other".into();
        assert!(bad.decode().is_err());
    }

    #[test]
    fn can_round_trip_and_text() {
        let t = canonical_basis_a(3, 2).unwrap();
        let doc = CanDoc::from_table(&t, LetterDisplay::Half);
        let s = serde_json::to_string(&doc).unwrap();
        assert!(s.contains("\"schema\":\"icanon/1\""));
        let back: CanDoc = serde_json::from_str(&s).unwrap();
        let decoded = back.decode().unwrap();
        let orig: Vec<_> = t.entries.iter().map(|e| (e.index.clone(), e.element.terms().clone())).collect();
        assert_eq!(decoded, orig);
        let text = can_text(&t, LetterDisplay::Half);
        assert!(text.contains("b(1,-1) = v1⊗v-1 + q v-1⊗v1"), "{text}");
        let tex = can_latex(&t, LetterDisplay::Half);
        assert!(tex.contains("v_{1} \\otimes v_{-1} + q v_{-1} \\otimes v_{1}"), "{tex}");
    }
}
