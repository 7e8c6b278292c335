//! The quantum group action on `V^{⊗m}`, the type A Hecke action, the quasi R-matrix and the
//! R-matrix.
//!
//! Letters of `V` are the centered values `(1-N)/2, ..., (N-1)/2` stored doubled, so the
//! alphabet is `-(N-1), -(N-3), ..., N-1`. The simple root with doubled label `i` joins the
//! letters `i - 1` and `i + 1`: `F_i v_{i-1} = v_{i+1}`, `E_i v_{i+1} = v_{i-1}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::laurent::{qint, LaurentError, LaurentPoly};
use crate::report::Report;

/// Default cap on `N^m`, overridable through `ICANON_MAX_DIM`.
pub const DEFAULT_MAX_DIM: u64 = 200_000;

pub fn max_dim() -> u64 {
    std::env::var("ICANON_MAX_DIM").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_DIM)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("dimension {dim} of V^(x){m} with N={n} exceeds the limit {limit}")]
    Capacity { n: usize, m: usize, dim: u64, limit: u64 },
    #[error("label {label} is not a simple root for N={n}")]
    BadLabel { label: i32, n: usize },
    #[error("bad tensor index: {0}")]
    BadIndex(String),
    #[error("N must be at least 1 and m at least 1")]
    Empty,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Doubled alphabet of `V` for `dim V = n`.
pub fn letters(n: usize) -> Vec<i32> {
    (0..n as i32).map(|j| 2 * j - (n as i32 - 1)).collect()
}

/// Doubled simple-root labels for `sl_n`.
pub fn root_labels(n: usize) -> Vec<i32> {
    (1..n as i32).map(|j| 2 * j - n as i32).collect()
}

/// How letters are shown to humans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LetterDisplay {
    /// Centered values, e.g. `-1/2`, `0`, `3/2`.
    #[default]
    Half,
    /// The stored doubled integers.
    Int,
    /// `1..=N`.
    Classic,
}

impl FromStr for LetterDisplay {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "half" => Ok(LetterDisplay::Half),
            "int" => Ok(LetterDisplay::Int),
            "classic" => Ok(LetterDisplay::Classic),
            _ => Err(format!("unknown display mode {s:?}")),
        }
    }
}

pub fn format_letter(x: i32, n: usize, mode: LetterDisplay) -> String {
    match mode {
        LetterDisplay::Int => x.to_string(),
        LetterDisplay::Classic => ((x + n as i32 + 1) / 2).to_string(),
        LetterDisplay::Half if x % 2 == 0 => (x / 2).to_string(),
        LetterDisplay::Half => format!("{x}/2"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorIndex(pub Vec<i32>);

impl TensorIndex {
    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn display(&self, n: usize, mode: LetterDisplay) -> String {
        let parts: Vec<String> = self.0.iter().map(|&x| format_letter(x, n, mode)).collect();
        format!("({})", parts.join(","))
    }

    /// Parses `(-1,1,3)` in doubled coordinates.
    pub fn parse(s: &str, n: usize) -> Result<Self, TensorError> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| TensorError::BadIndex(s.to_string()))?;
        let alphabet = letters(n);
        let entries = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i32>()
                    .ok()
                    .filter(|x| alphabet.contains(x))
                    .ok_or_else(|| TensorError::BadIndex(format!("{p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TensorIndex(entries))
    }

    pub fn with(&self, pos: usize, value: i32) -> Self {
        let mut v = self.0.clone();
        v[pos] = value;
        TensorIndex(v)
    }

    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i, j);
        TensorIndex(v)
    }
}

impl fmt::Display for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `V^{⊗m}` with `dim V = n`, checked against the capacity limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    pub n: usize,
    pub m: usize,
}

impl TensorSpace {
    pub fn new(n: usize, m: usize) -> Result<Self, TensorError> {
        if n == 0 || m == 0 {
            return Err(TensorError::Empty);
        }
        let dim = (n as u64).checked_pow(m as u32).unwrap_or(u64::MAX);
        let limit = max_dim();
        if dim > limit {
            return Err(TensorError::Capacity { n, m, dim, limit });
        }
        Ok(TensorSpace { n, m })
    }

    pub fn dim(&self) -> usize {
        self.n.pow(self.m as u32)
    }

    /// All indices in lexicographic order.
    pub fn basis(&self) -> Vec<TensorIndex> {
        let alphabet = letters(self.n);
        let mut out = vec![TensorIndex(Vec::with_capacity(self.m))];
        for _ in 0..self.m {
            out = out
                .into_iter()
                .flat_map(|idx| {
                    alphabet.iter().map(move |&a| {
                        let mut v = idx.0.clone();
                        v.push(a);
                        TensorIndex(v)
                    })
                })
                .collect();
        }
        out
    }

    pub fn check_label(&self, label: i32) -> Result<(), TensorError> {
        if root_labels(self.n).contains(&label) {
            Ok(())
        } else {
            Err(TensorError::BadLabel { label, n: self.n })
        }
    }

    fn factor(&self, m: usize) -> TensorSpace {
        TensorSpace { n: self.n, m }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElt {
    n: usize,
    m: usize,
    terms: BTreeMap<TensorIndex, LaurentPoly>,
}

impl TensorElt {
    pub fn zero(space: TensorSpace) -> Self {
        TensorElt { n: space.n, m: space.m, terms: BTreeMap::new() }
    }

    /// The standard basis vector `M_f`.
    pub fn basis(space: TensorSpace, f: TensorIndex) -> Self {
        Self::from_terms(space, [(f, LaurentPoly::one())])
    }

    pub fn from_terms(
        space: TensorSpace,
        terms: impl IntoIterator<Item = (TensorIndex, LaurentPoly)>,
    ) -> Self {
        let mut out = Self::zero(space);
        for (f, c) in terms {
            debug_assert_eq!(f.0.len(), space.m);
            out.add_term(f, &c);
        }
        out
    }

    pub fn space(&self) -> TensorSpace {
        TensorSpace { n: self.n, m: self.m }
    }

    pub fn terms(&self) -> &BTreeMap<TensorIndex, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, f: &TensorIndex) -> LaurentPoly {
        self.terms.get(f).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, f: TensorIndex, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(f) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElt, c: &LaurentPoly) {
        for (f, v) in &other.terms {
            self.add_term(f.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.space());
        out.add_scaled(self, c);
        out
    }

    /// Applies `q -> q^-1` to the coefficients.
    pub fn bar_coeffs(&self) -> Self {
        TensorElt {
            n: self.n,
            m: self.m,
            terms: self.terms.iter().map(|(f, c)| (f.clone(), c.bar())).collect(),
        }
    }

    pub fn tensor(&self, other: &TensorElt) -> Self {
        let space = TensorSpace { n: self.n, m: self.m + other.m };
        let mut out = Self::zero(space);
        for (f, c) in &self.terms {
            for (g, d) in &other.terms {
                let mut idx = f.0.clone();
                idx.extend_from_slice(&g.0);
                out.add_term(TensorIndex(idx), &(c * d));
            }
        }
        out
    }

    pub fn display(&self, mode: LetterDisplay) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(f, c)| {
                let v = f.display(self.n, mode);
                if c.is_one() {
                    format!("M{v}")
                } else {
                    format!("({c}) M{v}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for TensorElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(LetterDisplay::Int))
    }
}

impl Add<&TensorElt> for &TensorElt {
    type Output = TensorElt;
    fn add(self, rhs: &TensorElt) -> TensorElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::one());
        out
    }
}

impl Sub<&TensorElt> for &TensorElt {
    type Output = TensorElt;
    fn sub(self, rhs: &TensorElt) -> TensorElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &LaurentPoly::constant(-1));
        out
    }
}

impl Neg for &TensorElt {
    type Output = TensorElt;
    fn neg(self) -> TensorElt {
        self.scale(&LaurentPoly::constant(-1))
    }
}

/// Column-sparse operator on `V^{⊗m}`. Missing columns are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct GenMatrix {
    space: TensorSpace,
    cols: BTreeMap<TensorIndex, TensorElt>,
}

impl GenMatrix {
    pub fn zero(space: TensorSpace) -> Self {
        GenMatrix { space, cols: BTreeMap::new() }
    }

    pub fn identity(space: TensorSpace) -> Self {
        Self::from_fn(space, |f| TensorElt::basis(space, f.clone()))
    }

    /// Builds the operator column by column.
    pub fn from_fn(space: TensorSpace, mut col: impl FnMut(&TensorIndex) -> TensorElt) -> Self {
        let mut cols = BTreeMap::new();
        for f in space.basis() {
            let c = col(&f);
            if !c.is_zero() {
                cols.insert(f, c);
            }
        }
        GenMatrix { space, cols }
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn column(&self, f: &TensorIndex) -> TensorElt {
        self.cols.get(f).cloned().unwrap_or_else(|| TensorElt::zero(self.space))
    }

    pub fn columns(&self) -> &BTreeMap<TensorIndex, TensorElt> {
        &self.cols
    }

    pub fn entry(&self, row: &TensorIndex, col: &TensorIndex) -> LaurentPoly {
        self.cols.get(col).map(|c| c.coeff(row)).unwrap_or_default()
    }

    pub fn apply(&self, x: &TensorElt) -> TensorElt {
        let mut out = TensorElt::zero(self.space);
        for (f, c) in &x.terms {
            if let Some(col) = self.cols.get(f) {
                out.add_scaled(col, c);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GenMatrix) -> GenMatrix {
        let mut cols = BTreeMap::new();
        for (f, c) in &other.cols {
            let v = self.apply(c);
            if !v.is_zero() {
                cols.insert(f.clone(), v);
            }
        }
        GenMatrix { space: self.space, cols }
    }

    /// Composes a list left to right as written: `[a, b, c]` is `a ∘ b ∘ c`.
    pub fn product(space: TensorSpace, factors: &[&GenMatrix]) -> GenMatrix {
        factors.iter().rev().fold(GenMatrix::identity(space), |acc, x| x.compose(&acc))
    }

    pub fn scale(&self, c: &LaurentPoly) -> GenMatrix {
        let mut cols = BTreeMap::new();
        for (f, col) in &self.cols {
            let v = col.scale(c);
            if !v.is_zero() {
                cols.insert(f.clone(), v);
            }
        }
        GenMatrix { space: self.space, cols }
    }

    pub fn add_scaled(&self, other: &GenMatrix, c: &LaurentPoly) -> GenMatrix {
        let mut cols = self.cols.clone();
        for (f, col) in &other.cols {
            let entry = cols.entry(f.clone()).or_insert_with(|| TensorElt::zero(self.space));
            entry.add_scaled(col, c);
            if entry.is_zero() {
                cols.remove(f);
            }
        }
        GenMatrix { space: self.space, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    /// Largest absolute coefficient among all entries.
    pub fn max_norm(&self) -> num_bigint::BigInt {
        self.cols.values().flat_map(|c| c.terms.values().map(|p| p.max_abs_coeff())).max().unwrap_or_default()
    }

    /// Applies `q -> q^-1` entrywise.
    pub fn bar_entries(&self) -> GenMatrix {
        GenMatrix {
            space: self.space,
            cols: self.cols.iter().map(|(f, c)| (f.clone(), c.bar_coeffs())).collect(),
        }
    }

    /// Exact entrywise division.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<GenMatrix, TensorError> {
        let mut cols = BTreeMap::new();
        for (f, col) in &self.cols {
            let mut out = TensorElt::zero(self.space);
            for (g, c) in &col.terms {
                out.add_term(g.clone(), &c.div_exact(d)?);
            }
            cols.insert(f.clone(), out);
        }
        Ok(GenMatrix { space: self.space, cols })
    }

    /// `self ⊗ other` acting on `V^{⊗(m1 + m2)}`.
    pub fn kron(&self, other: &GenMatrix) -> GenMatrix {
        let space = TensorSpace { n: self.space.n, m: self.space.m + other.space.m };
        let mut cols = BTreeMap::new();
        for (f, a) in &self.cols {
            for (g, b) in &other.cols {
                let mut idx = f.0.clone();
                idx.extend_from_slice(&g.0);
                cols.insert(TensorIndex(idx), a.tensor(b));
            }
        }
        GenMatrix { space, cols }
    }

    fn kron_chain(factors: &[&GenMatrix]) -> GenMatrix {
        let mut it = factors.iter();
        let first = (*it.next().expect("at least one factor")).clone();
        it.fold(first, |acc, x| acc.kron(x))
    }

    /// Nonzero entries as `(row, column, coefficient)` triples.
    pub fn triples(&self) -> Vec<(TensorIndex, TensorIndex, LaurentPoly)> {
        let mut out = Vec::new();
        for (f, col) in &self.cols {
            for (g, c) in &col.terms {
                out.push((g.clone(), f.clone(), c.clone()));
            }
        }
        out
    }
}

impl fmt::Debug for GenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GenMatrix(N={}, m={})", self.space.n, self.space.m)?;
        for (col, v) in &self.cols {
            writeln!(f, "  {col} -> {v:?}")?;
        }
        Ok(())
    }
}

impl Add<&GenMatrix> for &GenMatrix {
    type Output = GenMatrix;
    fn add(self, rhs: &GenMatrix) -> GenMatrix {
        self.add_scaled(rhs, &LaurentPoly::one())
    }
}

impl Sub<&GenMatrix> for &GenMatrix {
    type Output = GenMatrix;
    fn sub(self, rhs: &GenMatrix) -> GenMatrix {
        self.add_scaled(rhs, &LaurentPoly::constant(-1))
    }
}

/// Generators of `U_q(gl_N)` acting on one factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    E(i32),
    F(i32),
    K(i32),
    KInv(i32),
    /// `D_a v_b = q^{[a = b]} v_b`, labelled by a letter.
    D(i32),
}

/// Single-factor matrix of a generator on `V`.
pub fn act_single(n: usize, g: Gen) -> Result<GenMatrix, TensorError> {
    let v = TensorSpace::new(n, 1)?;
    match g {
        Gen::E(i) | Gen::F(i) | Gen::K(i) | Gen::KInv(i) => v.check_label(i)?,
        Gen::D(a) => {
            if !letters(n).contains(&a) {
                return Err(TensorError::BadIndex(format!("letter {a} for N={n}")));
            }
        }
    }
    Ok(GenMatrix::from_fn(v, |f| {
        let a = f.0[0];
        let one = |b: i32, c: LaurentPoly| TensorElt::from_terms(v, [(TensorIndex(vec![b]), c)]);
        match g {
            Gen::F(i) if a == i - 1 => one(i + 1, LaurentPoly::one()),
            Gen::E(i) if a == i + 1 => one(i - 1, LaurentPoly::one()),
            Gen::E(_) | Gen::F(_) => TensorElt::zero(v),
            Gen::K(i) => one(a, LaurentPoly::monomial(1, k_exp(i, a))),
            Gen::KInv(i) => one(a, LaurentPoly::monomial(1, -k_exp(i, a))),
            Gen::D(b) => one(a, LaurentPoly::monomial(1, (a == b) as i32)),
        }
    }))
}

/// Exponent of the `K_i` eigenvalue on the letter `a`.
fn k_exp(i: i32, a: i32) -> i32 {
    (a == i - 1) as i32 - (a == i + 1) as i32
}

pub fn act_e(n: usize, i: i32) -> Result<GenMatrix, TensorError> {
    act_single(n, Gen::E(i))
}

pub fn act_f(n: usize, i: i32) -> Result<GenMatrix, TensorError> {
    act_single(n, Gen::F(i))
}

pub fn act_k(n: usize, i: i32) -> Result<GenMatrix, TensorError> {
    act_single(n, Gen::K(i))
}

/// Action on `V^{⊗m}` through the iterated comultiplication
/// `Δ(E) = 1⊗E + E⊗K^-1`, `Δ(F) = F⊗1 + K⊗F`, `Δ(K) = K⊗K`.
pub fn lift_to_tensor(space: TensorSpace, g: Gen) -> Result<GenMatrix, TensorError> {
    let x = act_single(space.n, g)?;
    let m = space.m;
    let one = GenMatrix::identity(space.factor(1));
    let chain = |before: &GenMatrix, after: &GenMatrix| {
        let mut total = GenMatrix::zero(space);
        for a in 0..m {
            let mut factors: Vec<&GenMatrix> = Vec::with_capacity(m);
            factors.extend(std::iter::repeat_n(before, a));
            factors.push(&x);
            factors.extend(std::iter::repeat_n(after, m - a - 1));
            total = &total + &GenMatrix::kron_chain(&factors);
        }
        total
    };
    Ok(match g {
        Gen::E(i) => chain(&one, &act_single(space.n, Gen::KInv(i))?),
        Gen::F(i) => chain(&act_single(space.n, Gen::K(i))?, &one),
        Gen::K(_) | Gen::KInv(_) | Gen::D(_) => GenMatrix::kron_chain(&vec![&x; m]),
    })
}

/// `X^r / [r]!`, which is integral on `V^{⊗m}`.
pub fn divided_power(x: &GenMatrix, r: u32) -> Result<GenMatrix, TensorError> {
    let space = x.space();
    let mut p = GenMatrix::identity(space);
    for _ in 0..r {
        p = x.compose(&p);
    }
    p.div_exact(&crate::laurent::qfactorial(r))
}

/// Right action of `H_i` (`1 <= i < m`) on `M_f`.
pub fn hecke_action_a(space: TensorSpace, f: &TensorIndex, i: usize) -> TensorElt {
    assert!(i >= 1 && i < space.m, "H_{i} does not act on V^(x){}", space.m);
    let (a, b) = (f.0[i - 1], f.0[i]);
    let swapped = f.swapped(i - 1, i);
    match a.cmp(&b) {
        std::cmp::Ordering::Less => TensorElt::basis(space, swapped),
        std::cmp::Ordering::Greater => TensorElt::from_terms(
            space,
            [(swapped, LaurentPoly::one()), (f.clone(), "q^-1 - q".parse().unwrap())],
        ),
        std::cmp::Ordering::Equal => {
            TensorElt::from_terms(space, [(f.clone(), LaurentPoly::monomial(1, -1))])
        }
    }
}

/// The operator `x -> x H_i`.
pub fn hecke_matrix_a(space: TensorSpace, i: usize) -> GenMatrix {
    GenMatrix::from_fn(space, |f| hecke_action_a(space, f, i))
}

/// The operator `x -> x H_i^-1 = x H_i + (q - q^-1) x`.
pub fn hecke_inv_matrix_a(space: TensorSpace, i: usize) -> GenMatrix {
    hecke_matrix_a(space, i).add_scaled(&GenMatrix::identity(space), &"q - q^-1".parse().unwrap())
}

/// Matrix unit on `V` sending `v_b` to `v_a`.
fn matrix_unit(n: usize, a: i32, b: i32) -> GenMatrix {
    let v = TensorSpace { n, m: 1 };
    GenMatrix::from_fn(v, |f| {
        if f.0[0] == b {
            TensorElt::basis(v, TensorIndex(vec![a]))
        } else {
            TensorElt::zero(v)
        }
    })
}

/// `q - q^-1`.
fn q_diff() -> LaurentPoly {
    "-q^-1 + q".parse().unwrap()
}

/// Quasi R-matrix on `V ⊗ V`: `1 + (q - q^-1) Σ_{a<b} e_ab ⊗ e_ba`.
pub fn quasi_r_on_vv(n: usize) -> Result<GenMatrix, TensorError> {
    let space = TensorSpace::new(n, 2)?;
    let alphabet = letters(n);
    let mut theta = GenMatrix::identity(space);
    for (x, &a) in alphabet.iter().enumerate() {
        for &b in &alphabet[x + 1..] {
            let term = matrix_unit(n, a, b).kron(&matrix_unit(n, b, a));
            theta = theta.add_scaled(&term, &q_diff());
        }
    }
    Ok(theta)
}

/// Root vector `F_{a,b}` for alphabet positions `a < b`, acting on `V^{⊗m}`:
/// `F_{a,a+1} = F`, `F_{a,b} = F_{b-1} F_{a,b-1} - q^-1 F_{a,b-1} F_{b-1}`.
pub fn root_vector_f(space: TensorSpace, a: usize, b: usize) -> Result<GenMatrix, TensorError> {
    assert!(a < b && b < space.n, "positions {a} < {b} out of range");
    let labels = root_labels(space.n);
    let simple = |j: usize| lift_to_tensor(space, Gen::F(labels[j]));
    let mut acc = simple(a)?;
    for c in a + 2..=b {
        let f = simple(c - 1)?;
        acc = &f.compose(&acc) - &acc.compose(&f).scale(&LaurentPoly::monomial(1, -1));
    }
    Ok(acc)
}

/// Quasi R-matrix on `V ⊗ V^{⊗(m-1)}`: `1 + Σ_{a<b} e_ab ⊗ (q - q^-1) F_{a,b}`.
pub fn quasi_r_split(space: TensorSpace) -> Result<GenMatrix, TensorError> {
    assert!(space.m >= 2, "the split quasi R-matrix needs m >= 2");
    let rest = space.factor(space.m - 1);
    let alphabet = letters(space.n);
    let mut theta = GenMatrix::identity(space);
    for a in 0..space.n {
        for b in a + 1..space.n {
            let x = root_vector_f(rest, a, b)?.scale(&q_diff());
            theta = &theta + &matrix_unit(space.n, alphabet[a], alphabet[b]).kron(&x);
        }
    }
    Ok(theta)
}

/// Images `ψ(M_f)` of the bar involution defined by `ψ = Θ ∘ (bar ⊗ ψ)` recursively.
pub fn psi_via_theta(space: TensorSpace) -> Result<GenMatrix, TensorError> {
    let v = space.factor(1);
    let mut psi = GenMatrix::identity(v);
    for m in 2..=space.m {
        let sm = space.factor(m);
        let theta = quasi_r_split(sm)?;
        let prev = psi;
        psi = GenMatrix::from_fn(sm, |f| {
            let head = TensorElt::basis(v, TensorIndex(vec![f.0[0]]));
            let tail = prev.column(&TensorIndex(f.0[1..].to_vec()));
            theta.apply(&head.tensor(&tail))
        });
    }
    Ok(psi)
}

/// Applies an anti-linear map given by its images of basis vectors.
pub fn apply_antilinear(images: &GenMatrix, x: &TensorElt) -> TensorElt {
    images.apply(&x.bar_coeffs())
}

/// Embeds an operator on `V ⊗ V` at factors `(i, i+1)` (1-based) of `V^{⊗m}`.
fn on_pair(space: TensorSpace, i: usize, op: &GenMatrix) -> GenMatrix {
    let id = GenMatrix::identity(space.factor(1));
    let mut factors: Vec<&GenMatrix> = Vec::new();
    factors.extend(std::iter::repeat_n(&id, i - 1));
    factors.push(op);
    factors.extend(std::iter::repeat_n(&id, space.m - i - 1));
    GenMatrix::kron_chain(&factors)
}

/// `R_i = Θ ∘ f̃ ∘ P` on factors `(i, i+1)`, where `f̃` scales `v_a ⊗ v_a` by `q`.
pub fn r_matrix(space: TensorSpace, i: usize) -> Result<GenMatrix, TensorError> {
    assert!(i >= 1 && i < space.m, "R_{i} needs 1 <= i < m");
    let vv = TensorSpace::new(space.n, 2)?;
    let swap = GenMatrix::from_fn(vv, |f| TensorElt::basis(vv, f.swapped(0, 1)));
    let twist = GenMatrix::from_fn(vv, |f| {
        let c = LaurentPoly::monomial(1, (f.0[0] == f.0[1]) as i32);
        TensorElt::from_terms(vv, [(f.clone(), c)])
    });
    let r = GenMatrix::product(vv, &[&quasi_r_on_vv(space.n)?, &twist, &swap]);
    Ok(on_pair(space, i, &r))
}

/// Cartan integer for doubled labels.
pub fn cartan(i: i32, j: i32) -> i32 {
    match (i - j).abs() {
        0 => 2,
        2 => -1,
        _ => 0,
    }
}

fn commutator(a: &GenMatrix, b: &GenMatrix) -> GenMatrix {
    &a.compose(b) - &b.compose(a)
}

/// `X_i^2 X_j - [2] X_i X_j X_i + X_j X_i^2`.
pub fn serre_expr(xi: &GenMatrix, xj: &GenMatrix) -> GenMatrix {
    let xixi = xi.compose(xi);
    let mid = xi.compose(&xj.compose(xi)).scale(&qint(2));
    &(&xixi.compose(xj) - &mid) + &xj.compose(&xixi)
}

/// Generators `E_i, F_i, K_i, K_i^-1` lifted to `V^{⊗m}`, keyed by label.
pub struct LiftedGens {
    pub e: BTreeMap<i32, GenMatrix>,
    pub f: BTreeMap<i32, GenMatrix>,
    pub k: BTreeMap<i32, GenMatrix>,
    pub kinv: BTreeMap<i32, GenMatrix>,
}

impl LiftedGens {
    pub fn new(space: TensorSpace) -> Result<Self, TensorError> {
        let mut out =
            LiftedGens { e: BTreeMap::new(), f: BTreeMap::new(), k: BTreeMap::new(), kinv: BTreeMap::new() };
        for i in root_labels(space.n) {
            out.e.insert(i, lift_to_tensor(space, Gen::E(i))?);
            out.f.insert(i, lift_to_tensor(space, Gen::F(i))?);
            out.k.insert(i, lift_to_tensor(space, Gen::K(i))?);
            out.kinv.insert(i, lift_to_tensor(space, Gen::KInv(i))?);
        }
        Ok(out)
    }
}

/// Defining relations of `U_q(sl_N)` as operator identities on `V^{⊗m}`.
pub fn verify_quantum_relations(n: usize, m: usize) -> Result<Report, TensorError> {
    let space = TensorSpace::new(n, m)?;
    let g = LiftedGens::new(space)?;
    let id = GenMatrix::identity(space);
    let mut rep = Report::new("quantum-relations").param("N", n).param("m", m);
    let labels = root_labels(n);
    for &i in &labels {
        rep.record(g.k[&i].compose(&g.kinv[&i]) == id, || format!("K_{i} K_{i}^-1 != 1"));
        for &j in &labels {
            rep.record(g.k[&i].compose(&g.k[&j]) == g.k[&j].compose(&g.k[&i]), || {
                format!("K_{i}, K_{j} do not commute")
            });
            let c = cartan(i, j);
            let ke = GenMatrix::product(space, &[&g.k[&i], &g.e[&j], &g.kinv[&i]]);
            rep.record(ke == g.e[&j].scale(&LaurentPoly::monomial(1, c)), || {
                format!("K_{i} E_{j} K_{i}^-1 != q^{c} E_{j}")
            });
            let kf = GenMatrix::product(space, &[&g.k[&i], &g.f[&j], &g.kinv[&i]]);
            rep.record(kf == g.f[&j].scale(&LaurentPoly::monomial(1, -c)), || {
                format!("K_{i} F_{j} K_{i}^-1 != q^{} F_{j}", -c)
            });
            let ef = commutator(&g.e[&i], &g.f[&j]);
            let expect =
                if i == j { (&g.k[&i] - &g.kinv[&i]).div_exact(&q_diff())? } else { GenMatrix::zero(space) };
            rep.record(ef == expect, || format!("[E_{i}, F_{j}] is wrong"));
            match (i - j).abs() {
                0 => {}
                2 => {
                    rep.record(serre_expr(&g.e[&i], &g.e[&j]).is_zero(), || {
                        format!("E Serre relation fails for ({i}, {j})")
                    });
                    rep.record(serre_expr(&g.f[&i], &g.f[&j]).is_zero(), || {
                        format!("F Serre relation fails for ({i}, {j})")
                    });
                }
                _ => {
                    rep.record(commutator(&g.e[&i], &g.e[&j]).is_zero(), || {
                        format!("E_{i}, E_{j} do not commute")
                    });
                    rep.record(commutator(&g.f[&i], &g.f[&j]).is_zero(), || {
                        format!("F_{i}, F_{j} do not commute")
                    });
                }
            }
        }
    }
    Ok(rep)
}

/// Every lifted generator commutes with every `H_i` action.
pub fn verify_schur_commute(n: usize, m: usize) -> Result<Report, TensorError> {
    let space = TensorSpace::new(n, m)?;
    let g = LiftedGens::new(space)?;
    let mut rep = Report::new("schur-commute").param("N", n).param("m", m);
    for i in 1..m {
        let h = hecke_matrix_a(space, i);
        for (name, family) in [("E", &g.e), ("F", &g.f), ("K", &g.k)] {
            for (label, x) in family {
                rep.record(commutator(x, &h).is_zero(), || format!("{name}_{label} vs H_{i}"));
            }
        }
    }
    Ok(rep)
}

/// `H_i` acts as `R_i^-1`, and the `R_i` satisfy the braid relations.
pub fn verify_jimbo(n: usize, m: usize) -> Result<Report, TensorError> {
    let space = TensorSpace::new(n, m)?;
    let id = GenMatrix::identity(space);
    let mut rep = Report::new("jimbo").param("N", n).param("m", m);
    let rs: Vec<GenMatrix> = (1..m).map(|i| r_matrix(space, i)).collect::<Result<_, _>>()?;
    for i in 1..m {
        let h = hecke_matrix_a(space, i);
        // x H_i R_i = x for every basis vector x
        rep.record(rs[i - 1].compose(&h) == id, || format!("H_{i} != R_{i}^-1"));
        rep.record(h.compose(&rs[i - 1]) == id, || format!("R_{i} H_{i} != 1"));
    }
    for i in 1..m.saturating_sub(1) {
        let (a, b) = (&rs[i - 1], &rs[i]);
        let lhs = GenMatrix::product(space, &[a, b, a]);
        let rhs = GenMatrix::product(space, &[b, a, b]);
        rep.record(lhs == rhs, || format!("braid relation fails for R_{i}, R_{}", i + 1));
    }
    for i in 1..m {
        for j in i + 2..m {
            let (a, b) = (&rs[i - 1], &rs[j - 1]);
            rep.record(a.compose(b) == b.compose(a), || format!("R_{i}, R_{j} do not commute"));
        }
    }
    Ok(rep)
}

/// `Θ bar(Θ) = 1` on `V ⊗ V`, the closed form agrees with the root-vector form, and
/// `Δ(u) Θ = Θ Δbar(u)` on `V ⊗ V^{⊗(m-1)}` for all generators `u`.
pub fn verify_quasi_r(n: usize, m: usize) -> Result<Report, TensorError> {
    let mut rep = Report::new("quasi-r").param("N", n).param("m", m);
    let vv = TensorSpace::new(n, 2)?;
    let theta = quasi_r_on_vv(n)?;
    rep.record(theta.compose(&theta.bar_entries()) == GenMatrix::identity(vv), || {
        "Θ bar(Θ) != 1 on V⊗V".into()
    });
    rep.record(quasi_r_split(vv)? == theta, || "root-vector Θ differs on V⊗V".into());
    if m < 2 {
        return Ok(rep);
    }
    let space = TensorSpace::new(n, m)?;
    let rest = space.factor(m - 1);
    let theta = quasi_r_split(space)?;
    let one_v = GenMatrix::identity(space.factor(1));
    let one_m = GenMatrix::identity(rest);
    let full = LiftedGens::new(space)?;
    let tail = LiftedGens::new(rest)?;
    for i in root_labels(n) {
        let e1 = act_single(n, Gen::E(i))?;
        let f1 = act_single(n, Gen::F(i))?;
        let k1 = act_single(n, Gen::K(i))?;
        let kinv1 = act_single(n, Gen::KInv(i))?;
        let bar_e = &one_v.kron(&tail.e[&i]) + &e1.kron(&tail.k[&i]);
        let bar_f = &f1.kron(&one_m) + &kinv1.kron(&tail.f[&i]);
        let bar_k = k1.kron(&tail.k[&i]);
        for (name, delta, bar) in
            [("E", &full.e[&i], bar_e), ("F", &full.f[&i], bar_f), ("K", &full.k[&i], bar_k)]
        {
            rep.record(delta.compose(&theta) == theta.compose(&bar), || {
                format!("Θ does not intertwine {name}_{i}")
            });
        }
    }
    Ok(rep)
}

/// `F_1 F_2 F_1 = F_1^(2) F_2 + F_2 F_1^(2)` for `N = 3`.
pub fn verify_serre_example(m: usize) -> Result<Report, TensorError> {
    let space = TensorSpace::new(3, m)?;
    let labels = root_labels(3);
    let f1 = lift_to_tensor(space, Gen::F(labels[0]))?;
    let f2 = lift_to_tensor(space, Gen::F(labels[1]))?;
    let f1_2 = divided_power(&f1, 2)?;
    let lhs = GenMatrix::product(space, &[&f1, &f2, &f1]);
    let rhs = &f1_2.compose(&f2) + &f2.compose(&f1_2);
    let mut rep = Report::new("serre-example").param("N", 3).param("m", m);
    rep.record(lhs == rhs, || "F1 F2 F1 != F1^(2) F2 + F2 F1^(2)".into());
    Ok(rep)
}
