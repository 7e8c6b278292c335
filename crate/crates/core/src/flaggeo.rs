//! Flags over `F_2` and `F_3` by brute force: relative positions, convolution structure
//! constants, the Iwahori isomorphism, and the commuting actions on functions on
//! (partial flag) x (complete flag).
//!
//! A vector of `F_q^m` is encoded by its base-`q` digits, and a subspace by the bitmask of its
//! vectors, so intersection is `&` and inclusion is a mask test.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::hecke::{HeckeElt, HeckeParams};
use crate::laurent::LaurentPoly;
use crate::qtensor::{hecke_action_a, letters, TensorIndex, TensorSpace};
use crate::report::Report;
use crate::weyl::{self, Kind, WeylElt};

pub type Subspace = u128;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlagError {
    #[error("only the fields F_2 and F_3 are supported, got q={0}")]
    Field(u32),
    #[error("m={m}, q={q} is above the brute-force limit (m <= 3)")]
    Capacity { m: usize, q: u32 },
    #[error("N={0} is outside 1..=3")]
    Steps(usize),
}

/// `F_q^m` with addition and scalar tables.
#[derive(Debug, Clone)]
pub struct Ambient {
    pub q: u32,
    pub m: usize,
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl Ambient {
    pub fn new(m: usize, q: u32) -> Result<Self, FlagError> {
        if q != 2 && q != 3 {
            return Err(FlagError::Field(q));
        }
        if m > 3 {
            return Err(FlagError::Capacity { m, q });
        }
        let size = (q as usize).pow(m as u32);
        let digits = |mut x: usize| -> Vec<u32> {
            (0..m)
                .map(|_| {
                    let d = (x % q as usize) as u32;
                    x /= q as usize;
                    d
                })
                .collect()
        };
        let encode = |ds: &[u32]| ds.iter().rev().fold(0usize, |acc, &d| acc * q as usize + d as usize);
        let add = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| {
                        let s: Vec<u32> = digits(a).iter().zip(digits(b)).map(|(x, y)| (x + y) % q).collect();
                        encode(&s)
                    })
                    .collect()
            })
            .collect();
        let mul = (0..q)
            .map(|c| {
                (0..size).map(|a| encode(&digits(a).iter().map(|x| x * c % q).collect::<Vec<_>>())).collect()
            })
            .collect();
        Ok(Ambient { q, m, size, add, mul })
    }

    pub fn zero_space(&self) -> Subspace {
        1
    }

    pub fn whole(&self) -> Subspace {
        if self.size == 128 {
            u128::MAX
        } else {
            (1u128 << self.size) - 1
        }
    }

    /// `S + span(v)`.
    pub fn extend(&self, s: Subspace, v: usize) -> Subspace {
        let mut out = s;
        for x in (0..self.size).filter(|&x| s >> x & 1 == 1) {
            for c in 1..self.q as usize {
                out |= 1 << self.add[x][self.mul[c][v]];
            }
        }
        out
    }

    pub fn dim(&self, s: Subspace) -> usize {
        let mut n = s.count_ones();
        let mut d = 0;
        while n > 1 {
            n /= self.q;
            d += 1;
        }
        d
    }

    /// Every subspace, sorted by (dimension, mask).
    pub fn subspaces(&self) -> Vec<Subspace> {
        let mut seen = BTreeSet::from([self.zero_space()]);
        let mut frontier = vec![self.zero_space()];
        while let Some(s) = frontier.pop() {
            for v in (0..self.size).filter(|&v| s >> v & 1 == 0) {
                let t = self.extend(s, v);
                if seen.insert(t) {
                    frontier.push(t);
                }
            }
        }
        let mut out: Vec<_> = seen.into_iter().collect();
        out.sort_by_key(|&s| (self.dim(s), s));
        out
    }
}

/// A chain `0 ⊆ W_1 ⊆ ... ⊆ W_{N-1} ⊆ F^m`; only the intermediate spaces are stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    pub spaces: Vec<Subspace>,
}

impl Flag {
    /// `0, W_1, ..., W_{N-1}, F^m`.
    fn full_chain(&self, amb: &Ambient) -> Vec<Subspace> {
        let mut v = vec![amb.zero_space()];
        v.extend(&self.spaces);
        v.push(amb.whole());
        v
    }
}

fn chains(amb: &Ambient, subs: &[Subspace], steps: usize, strict: bool) -> Vec<Flag> {
    let mut out = vec![Flag { spaces: Vec::new() }];
    for level in 0..steps {
        let mut next = Vec::new();
        for f in &out {
            let below = f.spaces.last().copied().unwrap_or(amb.zero_space());
            for &s in subs {
                if s & below == below && (!strict || amb.dim(s) == level + 1) {
                    let mut spaces = f.spaces.clone();
                    spaces.push(s);
                    next.push(Flag { spaces });
                }
            }
        }
        out = next;
    }
    out
}

/// Complete flags of `F_q^m`.
pub fn enumerate_flags(m: usize, q: u32) -> Result<Vec<Flag>, FlagError> {
    let amb = Ambient::new(m, q)?;
    Ok(chains(&amb, &amb.subspaces(), m.saturating_sub(1), true))
}

/// `N`-step flags `0 ⊆ W_1 ⊆ ... ⊆ W_{N-1} ⊆ F_q^m` of every dimension profile.
pub fn enumerate_partial_flags(n: usize, m: usize, q: u32) -> Result<Vec<Flag>, FlagError> {
    if !(1..=3).contains(&n) {
        return Err(FlagError::Steps(n));
    }
    let amb = Ambient::new(m, q)?;
    Ok(chains(&amb, &amb.subspaces(), n - 1, false))
}

fn dims_array(amb: &Ambient, a: &Flag, b: &Flag) -> Vec<Vec<usize>> {
    let (ca, cb) = (a.full_chain(amb), b.full_chain(amb));
    ca.iter().map(|&x| cb.iter().map(|&y| amb.dim(x & y)).collect()).collect()
}

/// Relative position of two complete flags: the inverse of the permutation `σ` with
/// `dim(V_i ∩ V'_j) = #{k <= i : σ(k) <= j}`, so that `χ_x * χ_y` matches `T_x T_y`.
pub fn relative_position(amb: &Ambient, a: &Flag, b: &Flag) -> WeylElt {
    let d = dims_array(amb, a, b);
    let m = amb.m;
    let window = (1..=m)
        .map(|i| (1..=m).find(|&j| d[i][j] - d[i - 1][j] == 1).expect("complete flags") as i32)
        .collect();
    WeylElt::from_window(Kind::A, window).expect("relative position is a permutation").inverse()
}

/// Orbit label of a pair of partial flags: `a_ij = dim` of the `(i, j)` subquotient.
pub fn partial_position(amb: &Ambient, a: &Flag, b: &Flag) -> Vec<Vec<usize>> {
    let d = dims_array(amb, a, b);
    let (r, c) = (d.len(), d[0].len());
    (1..r).map(|i| (1..c).map(|j| d[i][j] + d[i - 1][j - 1] - d[i - 1][j] - d[i][j - 1]).collect()).collect()
}

/// Orbit label of (partial flag, complete flag): `f(j)` is the step where `V_j` first grows.
pub fn mixed_position(amb: &Ambient, w: &Flag, v: &Flag) -> Vec<usize> {
    let d = dims_array(amb, w, v);
    (1..=amb.m).map(|j| (1..d.len()).find(|&i| d[i][j] > d[i][j - 1]).expect("top space grows")).collect()
}

/// Complete flags with their pairwise relative positions.
pub struct FlagTable {
    pub amb: Ambient,
    pub flags: Vec<Flag>,
    pub pos: Vec<Vec<WeylElt>>,
}

impl FlagTable {
    pub fn new(m: usize, q: u32) -> Result<Self, FlagError> {
        let amb = Ambient::new(m, q)?;
        let flags = enumerate_flags(m, q)?;
        let pos =
            flags.iter().map(|a| flags.iter().map(|b| relative_position(&amb, a, b)).collect()).collect();
        Ok(FlagTable { amb, flags, pos })
    }

    fn pairs_in(&self, w: &WeylElt) -> Vec<(usize, usize)> {
        let n = self.flags.len();
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| &self.pos[i][j] == w).collect()
    }

    fn count_between(&self, w1: &WeylElt, w2: &WeylElt, (a, c): (usize, usize)) -> u64 {
        (0..self.flags.len()).filter(|&b| &self.pos[a][b] == w1 && &self.pos[b][c] == w2).count() as u64
    }

    /// `κ(w1, w2; w3)` for every `w3`. Each count is taken at two representative pairs of the
    /// `w3` orbit; `None` means they disagreed.
    pub fn convolution(&self, w1: &WeylElt, w2: &WeylElt) -> Option<BTreeMap<WeylElt, u64>> {
        let mut out = BTreeMap::new();
        for w3 in weyl::enumerate(Kind::A, self.amb.m).expect("small group") {
            let pairs = self.pairs_in(&w3);
            let first = self.count_between(w1, w2, pairs[0]);
            let last = self.count_between(w1, w2, *pairs.last().unwrap());
            if first != last {
                return None;
            }
            if first > 0 {
                out.insert(w3, first);
            }
        }
        Some(out)
    }
}

pub fn convolution_constants(
    w1: &WeylElt,
    w2: &WeylElt,
    m: usize,
    q: u32,
) -> Result<Option<BTreeMap<WeylElt, u64>>, FlagError> {
    Ok(FlagTable::new(m, q)?.convolution(w1, w2))
}

/// Substitutes `q^{2t} -> qq^{sign t}`; `None` unless every exponent is even with
/// `sign * e >= 0`.
pub fn specialize_even(p: &LaurentPoly, qq: u32, sign: i32) -> Option<BigInt> {
    let mut out = BigInt::from(0);
    for (e, c) in p.terms() {
        if e % 2 != 0 || sign * e < 0 {
            return None;
        }
        out += c * BigInt::from(qq).pow((sign * e / 2) as u32);
    }
    Some(out)
}

/// `T_{w1} T_{w2}` in the basis `T_w = (-q)^{l(w)} H_w`.
fn t_product(params: HeckeParams, w1: &WeylElt, w2: &WeylElt) -> BTreeMap<WeylElt, LaurentPoly> {
    let h = &HeckeElt::standard(params, w1.clone()) * &HeckeElt::standard(params, w2.clone());
    let ell = (w1.length() + w2.length()) as i32;
    h.terms()
        .iter()
        .map(|(w, c)| {
            let e = ell - w.length() as i32;
            let sign = if e % 2 == 0 { 1 } else { -1 };
            (w.clone(), c * &LaurentPoly::monomial(sign, e))
        })
        .collect()
}

/// Cell sizes, convolution versus the rescaled Hecke algebra, and associativity.
pub fn iwahori_check(m: usize, q: u32) -> Result<Report, FlagError> {
    let table = FlagTable::new(m, q)?;
    let mut rep = Report::new("iwahori").param("m", m).param("q", q);
    let w = weyl::enumerate(Kind::A, m).expect("small group");
    let expect_flags: u64 = (1..=m as u32).map(|i| (0..i).map(|e| (q as u64).pow(e)).sum::<u64>()).product();
    rep.record(table.flags.len() as u64 == expect_flags, || {
        format!("{} flags, expected {expect_flags}", table.flags.len())
    });
    for x in &w {
        let size = (0..table.flags.len()).filter(|&j| &table.pos[0][j] == x).count() as u64;
        rep.record(size == (q as u64).pow(x.length() as u32), || {
            format!("cell of {} has {size} flags", x.word_string())
        });
    }
    let params = HeckeParams::equal(Kind::A, m);
    let mut kappa = BTreeMap::new();
    for a in &w {
        for b in &w {
            let Some(k) = table.convolution(a, b) else {
                rep.record(false, || format!("κ({a}, {b}) depends on the representative pair"));
                continue;
            };
            let hecke = t_product(params, a, b);
            for c in &w {
                let geo = BigInt::from(k.get(c).copied().unwrap_or(0));
                let alg = specialize_even(&hecke.get(c).cloned().unwrap_or_default(), q, 1);
                rep.record(alg.as_ref() == Some(&geo), || {
                    format!("κ({a}, {b}; {c}) = {geo}, Hecke gives {alg:?}")
                });
            }
            kappa.insert((a.clone(), b.clone()), k);
        }
    }
    // associativity of the structure constants on generators
    let gens: Vec<WeylElt> = weyl::generators(Kind::A, m)
        .into_iter()
        .map(|i| WeylElt::from_word(Kind::A, m, &[i]).unwrap())
        .collect();
    let get = |a: &WeylElt, b: &WeylElt, c: &WeylElt| -> u64 {
        kappa.get(&(a.clone(), b.clone())).and_then(|k| k.get(c)).copied().unwrap_or(0)
    };
    for a in &gens {
        for b in &gens {
            for c in &gens {
                for x in &w {
                    let left: u64 = w.iter().map(|v| get(a, b, v) * get(v, c, x)).sum();
                    let right: u64 = w.iter().map(|v| get(b, c, v) * get(a, v, x)).sum();
                    rep.record(left == right, || format!("associativity fails at ({a}, {b}, {c}; {x})"));
                }
            }
        }
    }
    Ok(rep)
}

type IntMatrix = Vec<Vec<u64>>;

fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, |x| x.len()));
    let mut out = vec![vec![0; c]; r];
    for i in 0..r {
        for l in 0..k {
            if a[i][l] != 0 {
                for j in 0..c {
                    out[i][j] += a[i][l] * b[l][j];
                }
            }
        }
    }
    out
}

fn indicator<L: PartialEq>(labels: &[Vec<L>], target: &L) -> IntMatrix {
    labels.iter().map(|row| row.iter().map(|l| u64::from(l == target)).collect()).collect()
}

/// Reads a function off as a combination of orbit indicators; `None` if it is not constant on
/// some orbit.
fn orbit_coeffs<L: Ord + Clone>(labels: &[Vec<L>], f: &IntMatrix) -> Option<BTreeMap<L, u64>> {
    let mut out: BTreeMap<L, u64> = BTreeMap::new();
    for (row, vals) in labels.iter().zip(f) {
        for (l, &v) in row.iter().zip(vals) {
            if *out.entry(l.clone()).or_insert(v) != v {
                return None;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    Some(out)
}

fn inversions(f: &[usize]) -> i32 {
    let mut n = 0;
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            if f[i] > f[j] {
                n += 1;
            }
        }
    }
    n
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Functions on (N-step flag) x (complete flag): left convolution by functions on pairs of
/// N-step flags commutes with right convolution by `χ_{s_i}`, and the right action matches
/// `M_f H_i` on `V^{⊗m}` under `χ_f <-> q^{-inv(f)} M_f`, `χ_{s_i} <-> q^-1 H_i`,
/// `q^-2 -> qq`.
pub fn partial_flag_duality_check(n: usize, m: usize, q: u32) -> Result<Report, FlagError> {
    let table = FlagTable::new(m, q)?;
    let amb = &table.amb;
    let partial = enumerate_partial_flags(n, m, q)?;
    let mut rep = Report::new("partial-flag-duality").param("N", n).param("m", m).param("q", q);
    let mixed: Vec<Vec<Vec<usize>>> =
        partial.iter().map(|w| table.flags.iter().map(|v| mixed_position(amb, w, v)).collect()).collect();
    let pp: Vec<Vec<Vec<Vec<usize>>>> =
        partial.iter().map(|a| partial.iter().map(|b| partial_position(amb, a, b)).collect()).collect();
    let mixed_orbits: BTreeSet<Vec<usize>> = mixed.iter().flatten().cloned().collect();
    rep.record(mixed_orbits.len() == n.pow(m as u32), || {
        format!("{} orbits on F x B, expected N^m", mixed_orbits.len())
    });
    let pp_orbits: BTreeSet<Vec<Vec<usize>>> = pp.iter().flatten().cloned().collect();
    let nn = (n * n) as u64;
    let expect = binomial(m as u64 + nn - 1, nn - 1);
    rep.record(pp_orbits.len() as u64 == expect, || {
        format!("{} orbits on F x F, expected {expect}", pp_orbits.len())
    });
    let space = TensorSpace { n, m };
    let alphabet = letters(n);
    for i in weyl::generators(Kind::A, m) {
        let s = WeylElt::from_word(Kind::A, m, &[i]).unwrap();
        let chi_s = indicator(&table.pos, &s);
        for f in &mixed_orbits {
            let phi = indicator(&mixed, f);
            let right = matmul(&phi, &chi_s);
            let Some(geo) = orbit_coeffs(&mixed, &right) else {
                rep.record(false, || format!("χ_{f:?} * χ_s{i} is not G-invariant"));
                continue;
            };
            let idx = TensorIndex(f.iter().map(|&a| alphabet[a - 1]).collect());
            let alg = hecke_action_a(space, &idx, i);
            let mut expected: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
            let mut ok = true;
            for (g, c) in alg.terms() {
                let gl: Vec<usize> =
                    g.0.iter().map(|x| alphabet.iter().position(|y| y == x).unwrap() + 1).collect();
                let e = inversions(&gl) - inversions(f) - 1;
                match specialize_even(&(c * &LaurentPoly::monomial(1, e)), q, -1) {
                    Some(v) => {
                        expected.insert(gl, v);
                    }
                    None => ok = false,
                }
            }
            let geo: BTreeMap<Vec<usize>, BigInt> =
                geo.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect();
            rep.record(ok && geo == expected, || {
                format!("χ_{f:?} * χ_s{i}: geometry {geo:?}, Hecke {expected:?}")
            });
            for xi in &pp_orbits {
                let left = indicator(&pp, xi);
                let a = matmul(&matmul(&left, &phi), &chi_s);
                let b = matmul(&left, &right);
                rep.record(a == b, || format!("actions do not commute at {xi:?}, {f:?}, s{i}"));
                rep.record(orbit_coeffs(&mixed, &matmul(&left, &phi)).is_some(), || {
                    format!("left action of {xi:?} on χ_{f:?} is not G-invariant")
                });
            }
        }
    }
    Ok(rep)
}
