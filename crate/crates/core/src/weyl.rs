//! Weyl groups of types A, B and D as signed permutations in window notation.
//!
//! Right multiplication by a generator acts on positions: `s_0` negates position 1,
//! `s_i` swaps positions `i` and `i + 1`. In type D the generator `0` is `s_0 s_1 s_0`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

/// Largest group we are willing to enumerate.
pub const MAX_GROUP_ORDER: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("kind/rank mismatch: {0} vs {1}")]
    Mismatch(String, String),
    #[error("generator {0} does not exist in {1}")]
    BadGenerator(usize, String),
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    Capacity { order: u64, limit: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    A,
    B,
    D,
}

impl Kind {
    pub fn letter(self) -> char {
        match self {
            Kind::A => 'A',
            Kind::B => 'B',
            Kind::D => 'D',
        }
    }
}

/// Generator indices of the group of the given kind acting on `1..=m`.
pub fn generators(kind: Kind, m: usize) -> Vec<usize> {
    match kind {
        Kind::A => (1..m).collect(),
        Kind::B => (0..m).collect(),
        Kind::D if m >= 2 => (0..m).collect(),
        Kind::D => Vec::new(),
    }
}

/// Group order: `m!`, `2^m m!` or `2^(m-1) m!`.
pub fn group_order(kind: Kind, m: usize) -> u64 {
    let fact: u64 = (1..=m as u64).product();
    match kind {
        Kind::A => fact,
        Kind::B => fact << m,
        Kind::D => fact << m.saturating_sub(1),
    }
}

/// Human label, e.g. `S3`, `B2`, `D3`.
pub fn group_name(kind: Kind, m: usize) -> String {
    match kind {
        Kind::A => format!("S{m}"),
        Kind::B => format!("B{m}"),
        Kind::D => format!("D{m}"),
    }
}

/// Parses `S3`, `A2` (meaning S3), `B2`, `D3`.
pub fn parse_group(s: &str) -> Result<(Kind, usize), WeylError> {
    let s = s.trim();
    let err = || WeylError::Parse(format!("unknown group {s:?}"));
    let (head, rest) = s.split_at(s.chars().next().ok_or_else(err)?.len_utf8());
    let n: usize = rest.parse().map_err(|_| err())?;
    match head {
        "S" | "s" if n >= 1 => Ok((Kind::A, n)),
        "A" | "a" => Ok((Kind::A, n + 1)),
        "B" | "b" if n >= 1 => Ok((Kind::B, n)),
        "D" | "d" if n >= 2 => Ok((Kind::D, n)),
        _ => Err(err()),
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElt {
    kind: Kind,
    images: Vec<i32>,
}

impl WeylElt {
    pub fn identity(kind: Kind, m: usize) -> Self {
        WeylElt { kind, images: (1..=m as i32).collect() }
    }

    pub fn from_window(kind: Kind, images: Vec<i32>) -> Result<Self, WeylError> {
        let m = images.len() as i32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let a = x.unsigned_abs() as i32;
            if a == 0 || a > m || seen[(a - 1) as usize] {
                return Err(WeylError::Parse(format!("{images:?} is not a signed permutation")));
            }
            seen[(a - 1) as usize] = true;
        }
        let negs = images.iter().filter(|&&x| x < 0).count();
        match kind {
            Kind::A if negs > 0 => return Err(WeylError::Parse(format!("{images:?} has signs in type A"))),
            Kind::D if negs % 2 == 1 => {
                return Err(WeylError::Parse(format!("{images:?} has an odd number of signs")))
            }
            _ => {}
        }
        Ok(WeylElt { kind, images })
    }

    /// Evaluates a word `s_{a_1} ... s_{a_k}` from the identity.
    pub fn from_word(kind: Kind, m: usize, word: &[usize]) -> Result<Self, WeylError> {
        let mut w = Self::identity(kind, m);
        for &i in word {
            w = w.apply_gen(i)?;
        }
        Ok(w)
    }

    /// Parses `[2,-1,3]`, or a word like `s1 s0 s2` (`e` for the identity).
    pub fn parse(kind: Kind, m: usize, s: &str) -> Result<Self, WeylError> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
            let images = inner
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse::<i32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| WeylError::Parse(format!("{s:?}: {e}")))?;
            if images.len() != m {
                return Err(WeylError::Parse(format!("{s:?} does not have {m} entries")));
            }
            return Self::from_window(kind, images);
        }
        Self::from_word(kind, m, &parse_word(t)?)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// `w(x)` for `x` in `+-1..=+-m`.
    pub fn apply(&self, x: i32) -> i32 {
        let v = self.images[(x.unsigned_abs() - 1) as usize];
        if x < 0 {
            -v
        } else {
            v
        }
    }

    fn check_gen(&self, i: usize) -> Result<(), WeylError> {
        if generators(self.kind, self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(WeylError::BadGenerator(i, group_name(self.kind, self.rank())))
        }
    }

    fn check_same(&self, other: &WeylElt) -> Result<(), WeylError> {
        if self.kind == other.kind && self.rank() == other.rank() {
            Ok(())
        } else {
            Err(WeylError::Mismatch(group_name(self.kind, self.rank()), group_name(other.kind, other.rank())))
        }
    }

    /// `w s_i`.
    pub fn apply_gen(&self, i: usize) -> Result<Self, WeylError> {
        self.check_gen(i)?;
        Ok(self.right_gen(i))
    }

    pub(crate) fn right_gen(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        match (i, self.kind) {
            (0, Kind::B) => images[0] = -images[0],
            (0, Kind::D) => {
                let (a, b) = (images[0], images[1]);
                images[0] = -b;
                images[1] = -a;
            }
            (0, Kind::A) => unreachable!("type A has no generator 0"),
            _ => images.swap(i - 1, i),
        }
        WeylElt { kind: self.kind, images }
    }

    /// `s_i w`.
    pub(crate) fn left_gen(&self, i: usize) -> Self {
        let g = Self::identity(self.kind, self.rank()).right_gen(i);
        WeylElt { kind: self.kind, images: self.images.iter().map(|&x| g.apply(x)).collect() }
    }

    /// `self * other`, composing as maps (`other` first).
    pub fn multiply(&self, other: &WeylElt) -> Result<Self, WeylError> {
        self.check_same(other)?;
        Ok(WeylElt { kind: self.kind, images: other.images.iter().map(|&x| self.apply(x)).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            let pos = (x.unsigned_abs() - 1) as usize;
            images[pos] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        WeylElt { kind: self.kind, images }
    }

    pub fn length(&self) -> usize {
        let w = &self.images;
        let m = w.len();
        let mut inv = 0;
        let mut neg_pairs = 0;
        for i in 0..m {
            for j in i + 1..m {
                if w[i] > w[j] {
                    inv += 1;
                }
                if w[i] + w[j] < 0 {
                    neg_pairs += 1;
                }
            }
        }
        let negs = w.iter().filter(|&&x| x < 0).count();
        match self.kind {
            Kind::A => inv,
            Kind::B => inv + neg_pairs + negs,
            Kind::D => inv + neg_pairs,
        }
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        let w = &self.images;
        match (i, self.kind) {
            (0, Kind::B) => w[0] < 0,
            (0, Kind::D) => w[0] + w[1] < 0,
            (0, Kind::A) => false,
            _ => w[i - 1] > w[i],
        }
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        generators(self.kind, self.rank()).into_iter().filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        generators(self.kind, self.rank()).into_iter().filter(|&i| inv.has_right_descent(i)).collect()
    }

    /// Reduced word, stripping the smallest right descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let gens = generators(self.kind, self.rank());
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&i) = gens.iter().find(|&&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.right_gen(i);
        }
        word.reverse();
        word
    }

    /// Bruhat order via the subword criterion against this element's reduced word of `w`.
    pub fn bruhat_leq(&self, w: &WeylElt) -> bool {
        bruhat_leq_word(self, &w.reduced_word())
    }

    /// `w = u x` with `u` in `W_J` and `x` the minimal representative of `W_J w`.
    pub fn min_coset_rep(&self, j: &[usize]) -> (WeylElt, WeylElt) {
        let mut x = self.clone();
        let mut u = Self::identity(self.kind, self.rank());
        while let Some(&s) = j.iter().find(|&&s| x.has_left_descent(s)) {
            x = x.left_gen(s);
            u = u.right_gen(s);
        }
        (u, x)
    }

    pub fn word_string(&self) -> String {
        format_word(&self.reduced_word())
    }
}

/// Bruhat comparison of `u` against the element given by a reduced word.
pub fn bruhat_leq_word(u: &WeylElt, reduced: &[usize]) -> bool {
    let mut u = u.clone();
    for &s in reduced.iter().rev() {
        if u.has_right_descent(s) {
            u = u.right_gen(s);
        }
    }
    u.is_identity()
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
}

pub fn parse_word(s: &str) -> Result<Vec<usize>, WeylError> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    s.split_whitespace()
        .map(|t| {
            t.strip_prefix('s')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| WeylError::Parse(format!("bad letter {t:?}")))
        })
        .collect()
}

pub fn longest_element(kind: Kind, m: usize) -> WeylElt {
    let images = match kind {
        Kind::A => (1..=m as i32).rev().collect(),
        Kind::B => (1..=m as i32).map(|x| -x).collect(),
        Kind::D if m.is_multiple_of(2) => (1..=m as i32).map(|x| -x).collect(),
        Kind::D => (1..=m as i32).map(|x| if x == 1 { 1 } else { -x }).collect(),
    };
    WeylElt { kind, images }
}

fn check_capacity(order: u64) -> Result<(), WeylError> {
    if order > MAX_GROUP_ORDER {
        Err(WeylError::Capacity { order, limit: MAX_GROUP_ORDER })
    } else {
        Ok(())
    }
}

fn sort_canonical(elts: &mut [WeylElt]) {
    elts.sort_by_cached_key(|w| (w.length(), w.images.clone()));
}

/// The subgroup generated by `gens`, sorted by (length, window).
pub fn subgroup(kind: Kind, m: usize, gens: &[usize]) -> Result<Vec<WeylElt>, WeylError> {
    check_capacity(group_order(kind, m))?;
    let all = generators(kind, m);
    if let Some(&bad) = gens.iter().find(|g| !all.contains(g)) {
        return Err(WeylError::BadGenerator(bad, group_name(kind, m)));
    }
    let e = WeylElt::identity(kind, m);
    let mut seen = BTreeSet::from([e.clone()]);
    let mut queue = VecDeque::from([e]);
    while let Some(w) = queue.pop_front() {
        for &i in gens {
            let v = w.right_gen(i);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// All elements, sorted by (length, window).
pub fn enumerate(kind: Kind, m: usize) -> Result<Vec<WeylElt>, WeylError> {
    subgroup(kind, m, &generators(kind, m))
}

/// Minimal length representatives of `W_J \ W`, sorted by (length, window).
pub fn min_coset_reps(kind: Kind, m: usize, j: &[usize]) -> Result<Vec<WeylElt>, WeylError> {
    Ok(enumerate(kind, m)?.into_iter().filter(|w| j.iter().all(|&s| !w.has_left_descent(s))).collect())
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self)
    }
}
