//! Bar involutions `ψ` and `ψ_ı` on `V^{⊗m}`, canonical and ı-canonical bases with their
//! duals, and the coincidence checks against parabolic Kazhdan-Lusztig bases.
//!
//! Both involutions are defined from the Hecke side: they fix the (ı-)anti-dominant standard
//! vectors and satisfy `ψ(x h) = ψ(x) bar(h)`. The quasi R- and K-matrices are only used as
//! independent oracles.

use std::collections::BTreeMap;

use crate::completion::{bar_completion, CompletionError};
use crate::hecke::{parabolic_kl, Basis, HeckeError, HeckeParams, KlTable};
use crate::iqg::{hecke_action_b, IGens, IParams, IqgError};
use crate::laurent::{Lattice, LaurentPoly};
use crate::qtensor::{
    apply_antilinear, hecke_action_a, psi_via_theta, GenMatrix, LetterDisplay, TensorElt, TensorError,
    TensorIndex, TensorSpace,
};
use crate::report::Report;
use crate::weyl::{self, Kind, WeylElt, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CanonicalError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error(transparent)]
    Iqg(#[from] IqgError),
    #[error("{0}")]
    Orbit(String),
}

/// Which Hecke algebra acts on the right of `V^{⊗m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `H_q(S_m)`, for the canonical basis.
    A,
    /// `H_{p,q}(B_m)` with `p = q^k`, for the ı-canonical basis.
    Iota(i32),
}

impl Flavor {
    pub fn kind(self) -> Kind {
        match self {
            Flavor::A => Kind::A,
            Flavor::Iota(_) => Kind::B,
        }
    }

    pub fn hecke_params(self, m: usize) -> HeckeParams {
        match self {
            Flavor::A => HeckeParams::equal(Kind::A, m),
            Flavor::Iota(k) => HeckeParams::new(Kind::B, m, k),
        }
    }

    /// `M_f H_i`.
    pub fn act(self, space: TensorSpace, f: &TensorIndex, i: usize) -> TensorElt {
        match self {
            Flavor::A => hecke_action_a(space, f, i),
            Flavor::Iota(k) => hecke_action_b(space, f, i, k),
        }
    }

    /// `x H_i`, extended linearly.
    pub fn act_elt(self, x: &TensorElt, i: usize) -> TensorElt {
        let space = x.space();
        let mut out = TensorElt::zero(space);
        for (f, c) in x.terms() {
            out.add_scaled(&self.act(space, f, i), c);
        }
        out
    }

    /// `x H_i^-1 = x H_i + (p_i - p_i^-1) x`.
    pub fn act_inv_elt(self, x: &TensorElt, i: usize) -> TensorElt {
        let e = match self {
            Flavor::Iota(k) if i == 0 => k,
            _ => 1,
        };
        let mut out = self.act_elt(x, i);
        out.add_scaled(x, &(&LaurentPoly::monomial(1, e) - &LaurentPoly::monomial(1, -e)));
        out
    }

    /// The (ı-)anti-dominant representative of the orbit of `f`.
    pub fn orbit_rep(self, f: &TensorIndex) -> TensorIndex {
        let mut v: Vec<i32> = match self {
            Flavor::A => f.0.clone(),
            Flavor::Iota(_) => f.0.iter().map(|x| x.abs()).collect(),
        };
        v.sort_unstable();
        TensorIndex(v)
    }

    /// Generators fixing the representative, acting on it by `p_i^-1`.
    pub fn stabilizer(self, rep: &TensorIndex) -> Vec<usize> {
        let v = &rep.0;
        let mut j = Vec::new();
        if matches!(self, Flavor::Iota(_)) && v.first() == Some(&0) {
            j.push(0);
        }
        j.extend((1..v.len()).filter(|&i| v[i - 1] == v[i]));
        j
    }
}

/// An orbit of the Hecke action on standard basis vectors: `M_g = M_rep H_{w_g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub rep: TensorIndex,
    pub stabilizer: Vec<usize>,
    /// `(g, w_g)` with `w_g` running over minimal coset representatives in (length, window)
    /// order.
    pub members: Vec<(TensorIndex, WeylElt)>,
}

/// `M_rep H_w`, required to be a single standard vector.
fn orbit_image(
    space: TensorSpace,
    rep: &TensorIndex,
    w: &WeylElt,
    act: impl Fn(&TensorElt, usize) -> TensorElt,
) -> Result<TensorIndex, CanonicalError> {
    let mut x = TensorElt::basis(space, rep.clone());
    for i in w.reduced_word() {
        x = act(&x, i);
    }
    match x.terms().iter().next() {
        Some((g, c)) if x.terms().len() == 1 && c.is_one() => Ok(g.clone()),
        _ => {
            Err(CanonicalError::Orbit(format!("M{:?} H_{} is not a standard vector", rep.0, w.word_string())))
        }
    }
}

/// All orbits, ordered by representative.
pub fn blocks(flavor: Flavor, space: TensorSpace) -> Result<Vec<Block>, CanonicalError> {
    let mut reps: Vec<TensorIndex> = space.basis().iter().map(|f| flavor.orbit_rep(f)).collect();
    reps.sort();
    reps.dedup();
    let mut out = Vec::with_capacity(reps.len());
    for rep in reps {
        let stabilizer = flavor.stabilizer(&rep);
        let members = weyl::min_coset_reps(flavor.kind(), space.m, &stabilizer)?
            .into_iter()
            .map(|w| Ok((orbit_image(space, &rep, &w, |x, i| flavor.act_elt(x, i))?, w)))
            .collect::<Result<Vec<_>, CanonicalError>>()?;
        out.push(Block { rep, stabilizer, members });
    }
    Ok(out)
}

/// Images `ψ(M_g)` on one block: `ψ(M_rep) = M_rep` and `ψ(M_g H_i) = ψ(M_g) H_i^-1`.
fn block_psi(flavor: Flavor, space: TensorSpace, block: &Block) -> BTreeMap<TensorIndex, TensorElt> {
    let by_w: BTreeMap<&WeylElt, &TensorIndex> = block.members.iter().map(|(g, w)| (w, g)).collect();
    let mut images: BTreeMap<TensorIndex, TensorElt> = BTreeMap::new();
    for (g, w) in &block.members {
        let image = match w.reduced_word().last() {
            None => TensorElt::basis(space, g.clone()),
            Some(&i) => {
                let prev = by_w[&w.right_gen(i)];
                flavor.act_inv_elt(&images[prev], i)
            }
        };
        images.insert(g.clone(), image);
    }
    images
}

/// The images of all standard vectors under `ψ` (type A) or `ψ_ı` (type B flavor).
pub fn psi_images(flavor: Flavor, space: TensorSpace) -> Result<GenMatrix, CanonicalError> {
    let mut all = BTreeMap::new();
    for b in blocks(flavor, space)? {
        all.extend(block_psi(flavor, space, &b));
    }
    Ok(GenMatrix::from_fn(space, |f| all[f].clone()))
}

pub fn psi_a(x: &TensorElt) -> Result<TensorElt, CanonicalError> {
    Ok(apply_antilinear(&psi_images(Flavor::A, x.space())?, x))
}

pub fn psi_i(x: &TensorElt, k: i32) -> Result<TensorElt, CanonicalError> {
    Ok(apply_antilinear(&psi_images(Flavor::Iota(k), x.space())?, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CanKind {
    Canonical,
    DualCanonical,
    ICanonical(i32),
    DualICanonical(i32),
}

impl CanKind {
    pub fn new(flavor: Flavor, basis: Basis) -> Self {
        match (flavor, basis) {
            (Flavor::A, Basis::C) => CanKind::Canonical,
            (Flavor::A, Basis::L) => CanKind::DualCanonical,
            (Flavor::Iota(k), Basis::C) => CanKind::ICanonical(k),
            (Flavor::Iota(k), Basis::L) => CanKind::DualICanonical(k),
        }
    }

    pub fn flavor(self) -> Flavor {
        match self {
            CanKind::Canonical | CanKind::DualCanonical => Flavor::A,
            CanKind::ICanonical(k) | CanKind::DualICanonical(k) => Flavor::Iota(k),
        }
    }

    pub fn lattice(self) -> Lattice {
        match self {
            CanKind::Canonical | CanKind::ICanonical(_) => Lattice::Positive,
            CanKind::DualCanonical | CanKind::DualICanonical(_) => Lattice::Negative,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CanKind::Canonical => "canonical",
            CanKind::DualCanonical => "dual-canonical",
            CanKind::ICanonical(_) => "icanonical",
            CanKind::DualICanonical(_) => "dual-icanonical",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanEntry {
    pub index: TensorIndex,
    pub element: TensorElt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanTable {
    pub kind: CanKind,
    pub space: TensorSpace,
    /// Sorted by index.
    pub entries: Vec<CanEntry>,
}

impl CanTable {
    pub fn get(&self, f: &TensorIndex) -> Option<&CanEntry> {
        self.entries.binary_search_by(|e| e.index.cmp(f)).ok().map(|i| &self.entries[i])
    }

    /// Independent check: each entry is fixed by the matching involution, has leading
    /// coefficient 1 and all other coefficients in the lattice.
    pub fn verify(&self) -> Result<(), String> {
        let psi = psi_images(self.kind.flavor(), self.space).map_err(|e| e.to_string())?;
        let lattice = self.kind.lattice();
        for e in &self.entries {
            let show = || e.index.display(self.space.n, LetterDisplay::Half);
            if apply_antilinear(&psi, &e.element) != e.element {
                return Err(format!("entry {} is not bar-invariant", show()));
            }
            for (f, c) in e.element.terms() {
                let ok = if f == &e.index { c.is_one() } else { lattice.contains(c) };
                if !ok {
                    return Err(format!("entry {} has coefficient {c} on {f:?}", show()));
                }
            }
        }
        Ok(())
    }
}

/// Canonical-type basis over every block. `reverse_ties` processes equal-length members in
/// reverse window order, a different linear extension of the Bruhat order.
pub fn canonical_table_with(
    kind: CanKind,
    space: TensorSpace,
    reverse_ties: bool,
) -> Result<CanTable, CanonicalError> {
    let flavor = kind.flavor();
    let mut entries = Vec::with_capacity(space.dim());
    for mut block in blocks(flavor, space)? {
        if reverse_ties {
            block.members.sort_by(|(_, a), (_, b)| {
                a.length().cmp(&b.length()).then_with(|| b.images().cmp(a.images()))
            });
        }
        let psi = block_psi(flavor, space, &block);
        let family: Vec<TensorIndex> = block.members.iter().map(|(g, _)| g.clone()).collect();
        let cols: Vec<BTreeMap<TensorIndex, LaurentPoly>> =
            family.iter().map(|g| psi[g].terms().clone()).collect();
        let done = bar_completion(&family, &cols, kind.lattice())?;
        for (index, col) in family.into_iter().zip(done) {
            entries.push(CanEntry { index, element: TensorElt::from_terms(space, col) });
        }
    }
    entries.sort_by(|a, b| a.index.cmp(&b.index));
    Ok(CanTable { kind, space, entries })
}

pub fn canonical_table(kind: CanKind, n: usize, m: usize) -> Result<CanTable, CanonicalError> {
    canonical_table_with(kind, TensorSpace::new(n, m)?, false)
}

pub fn canonical_basis_a(n: usize, m: usize) -> Result<CanTable, CanonicalError> {
    canonical_table(CanKind::Canonical, n, m)
}

pub fn dual_canonical_a(n: usize, m: usize) -> Result<CanTable, CanonicalError> {
    canonical_table(CanKind::DualCanonical, n, m)
}

pub fn icanonical_basis(n: usize, m: usize, k: i32) -> Result<CanTable, CanonicalError> {
    canonical_table(CanKind::ICanonical(k), n, m)
}

pub fn dual_icanonical(n: usize, m: usize, k: i32) -> Result<CanTable, CanonicalError> {
    canonical_table(CanKind::DualICanonical(k), n, m)
}

/// Image of a parabolic KL table under `C_J h -> M_rep h`, keyed by the image of the index.
fn parabolic_images(
    space: TensorSpace,
    rep: &TensorIndex,
    table: &KlTable,
    act: impl Fn(&TensorElt, usize) -> TensorElt + Copy,
) -> Result<Vec<(TensorIndex, TensorElt)>, CanonicalError> {
    let mut cache: BTreeMap<WeylElt, TensorIndex> = BTreeMap::new();
    let mut image_of = |w: &WeylElt| -> Result<TensorIndex, CanonicalError> {
        if let Some(g) = cache.get(w) {
            return Ok(g.clone());
        }
        let g = orbit_image(space, rep, w, act)?;
        cache.insert(w.clone(), g.clone());
        Ok(g)
    };
    let mut out = Vec::with_capacity(table.entries.len());
    for e in &table.entries {
        let g = image_of(&e.index)?;
        let mut x = TensorElt::zero(space);
        for (y, c) in &e.coeffs {
            x.add_term(image_of(y)?, c);
        }
        out.push((g, x));
    }
    Ok(out)
}

fn compare_into(report: &mut Report, table: &CanTable, images: &[(TensorIndex, TensorElt)]) {
    let n = table.space.n;
    for (g, x) in images {
        let got = table.get(g).map(|e| &e.element);
        report.record(got == Some(x), || {
            format!(
                "at {}: table has {}, parabolic KL gives {}",
                g.display(n, LetterDisplay::Half),
                got.map_or("nothing".into(), |e| e.display(LetterDisplay::Half)),
                x.display(LetterDisplay::Half)
            )
        });
    }
}

fn coincide_flavor(check: &str, flavor: Flavor, n: usize, m: usize) -> Result<Report, CanonicalError> {
    let space = TensorSpace::new(n, m)?;
    let table = canonical_table_with(CanKind::new(flavor, Basis::C), space, false)?;
    let params = flavor.hecke_params(m);
    let mut report = Report::new(check).param("N", n).param("m", m);
    let mut seen = 0;
    for block in blocks(flavor, space)? {
        let kl = parabolic_kl(params, &block.stabilizer)?;
        let images = parabolic_images(space, &block.rep, &kl, |x, i| flavor.act_elt(x, i))?;
        seen += images.len();
        compare_into(&mut report, &table, &images);
    }
    report.record(seen == space.dim(), || format!("{seen} images for dimension {}", space.dim()));
    Ok(report)
}

/// Canonical basis of `V^{⊗m}` equals the images of parabolic KL bases of `S_m`.
pub fn coincide_a(n: usize, m: usize) -> Result<Report, CanonicalError> {
    coincide_flavor("coincide-a", Flavor::A, n, m)
}

/// ı-canonical basis at `p = q` equals the images of parabolic KL bases of `B_m`.
pub fn coincide_b(n: usize, m: usize) -> Result<Report, CanonicalError> {
    coincide_flavor("coincide-b", Flavor::Iota(1), n, m)
}

/// `x H^d_i` for the type D Hecke algebra inside `H_{1,q}(B_m)`: `H^d_0 = H_0 H_1 H_0`.
fn act_d(x: &TensorElt, i: usize) -> TensorElt {
    let b = Flavor::Iota(0);
    if i == 0 {
        b.act_elt(&b.act_elt(&b.act_elt(x, 0), 1), 0)
    } else {
        b.act_elt(x, i)
    }
}

/// ı-canonical basis at `p = 1` equals the images of parabolic KL bases of `D_m`.
///
/// Each type B orbit splits into type D orbits generated by `M_f` and `M_{f s_0}` for
/// ı-anti-dominant `f` (one orbit when `f` has a zero entry).
pub fn coincide_d(n: usize, m: usize) -> Result<Report, CanonicalError> {
    let space = TensorSpace::new(n, m)?;
    let table = canonical_table_with(CanKind::ICanonical(0), space, false)?;
    let params = HeckeParams::equal(Kind::D, m);
    let gens = weyl::generators(Kind::D, m);
    let mut report = Report::new("coincide-d").param("N", n).param("m", m);
    let mut covered: BTreeMap<TensorIndex, usize> = BTreeMap::new();
    let q_inv = LaurentPoly::monomial(1, -1);
    for block in blocks(Flavor::Iota(0), space)? {
        let mut reps = vec![block.rep.clone()];
        if block.rep.0[0] != 0 {
            reps.push(block.rep.with(0, -block.rep.0[0]));
        }
        for rep in reps {
            let start = TensorElt::basis(space, rep.clone());
            let stab: Vec<usize> =
                gens.iter().copied().filter(|&i| act_d(&start, i) == start.scale(&q_inv)).collect();
            let kl = parabolic_kl(params, &stab)?;
            let images = parabolic_images(space, &rep, &kl, act_d)?;
            for (g, _) in &images {
                *covered.entry(g.clone()).or_default() += 1;
            }
            compare_into(&mut report, &table, &images);
        }
    }
    let once = covered.len() == space.dim() && covered.values().all(|&c| c == 1);
    report.record(once, || "type D orbits do not partition the standard basis".into());
    Ok(report)
}

/// `Υ = ψ_ı ∘ ψ` as a linear operator.
pub fn upsilon_matrix(space: TensorSpace, k: i32) -> Result<GenMatrix, CanonicalError> {
    let psi = psi_images(Flavor::A, space)?;
    let psi_i = psi_images(Flavor::Iota(k), space)?;
    Ok(GenMatrix::from_fn(space, |f| apply_antilinear(&psi_i, &psi.column(f))))
}

pub fn upsilon_module(x: &TensorElt, k: i32) -> Result<TensorElt, CanonicalError> {
    Ok(upsilon_matrix(x.space(), k)?.apply(x))
}

/// `B_i Υ = Υ ψ(B_i)` and `k_i Υ = Υ k_i` on `V^{⊗m}`.
pub fn verify_upsilon_intertwine(n: usize, m: usize, k: i32) -> Result<Report, CanonicalError> {
    let space = TensorSpace::new(n, m)?;
    let ups = upsilon_matrix(space, k)?;
    let gens = IGens::new(IParams::new(n, k), m)?;
    let mut report = Report::new("upsilon-intertwine").param("N", n).param("m", m).param("k", k);
    for (i, b) in &gens.b {
        let ok = b.compose(&ups) == ups.compose(&gens.b_bar[i]);
        report.record(ok, || format!("B_{i} Υ != Υ ψ(B_{i})"));
    }
    for (i, kk) in &gens.k {
        report.record(kk.compose(&ups) == ups.compose(kk), || format!("k_{i} Υ != Υ k_{i}"));
    }
    Ok(report)
}

/// The Hecke-side `ψ` agrees with `Θ ∘ (bar ⊗ ψ)` built from the quasi R-matrix.
pub fn quasi_r_consistency(n: usize, m: usize) -> Result<Report, CanonicalError> {
    let space = TensorSpace::new(n, m)?;
    let hecke = psi_images(Flavor::A, space)?;
    let theta = psi_via_theta(space)?;
    let mut report = Report::new("quasi-r-consistency").param("N", n).param("m", m);
    for f in space.basis() {
        report.record(hecke.column(&f) == theta.column(&f), || {
            format!("ψ(M{}) differs", f.display(n, LetterDisplay::Half))
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn idx(v: &[i32]) -> TensorIndex {
        TensorIndex(v.to_vec())
    }

    fn elt(space: TensorSpace, terms: &[(&[i32], &str)]) -> TensorElt {
        TensorElt::from_terms(space, terms.iter().map(|(f, c)| (idx(f), lp(c))))
    }

    #[test]
    fn psi_examples() {
        let s = TensorSpace::new(2, 2).unwrap();
        let x = psi_a(&TensorElt::basis(s, idx(&[1, -1]))).unwrap();
        // M_{(+,-)} = M_{(-,+)} H_1, so ψ gives M_{(-,+)} H_1^-1
        assert_eq!(x, elt(s, &[(&[1, -1], "1"), (&[-1, 1], "q - q^-1")]));
        assert_eq!(psi_a(&TensorElt::basis(s, idx(&[-1, 1]))).unwrap(), TensorElt::basis(s, idx(&[-1, 1])));
        // ψ_ı(v_-) = v_- + (q - q^-1) v_+ at k = 1
        let v = TensorSpace::new(2, 1).unwrap();
        let y = psi_i(&TensorElt::basis(v, idx(&[-1])), 1).unwrap();
        assert_eq!(y, elt(v, &[(&[-1], "1"), (&[1], "q - q^-1")]));
    }

    #[test]
    fn psi_is_involution() {
        for (n, m) in [(2, 2), (3, 2), (3, 3)] {
            let s = TensorSpace::new(n, m).unwrap();
            for flavor in [Flavor::A, Flavor::Iota(0), Flavor::Iota(1), Flavor::Iota(2)] {
                let p = psi_images(flavor, s).unwrap();
                for f in s.basis() {
                    let x = TensorElt::basis(s, f.clone());
                    assert_eq!(apply_antilinear(&p, &p.column(&f)), x, "{flavor:?} N={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn canonical_examples_v_tensor_v() {
        let s = TensorSpace::new(3, 2).unwrap();
        let t = canonical_basis_a(3, 2).unwrap();
        assert_eq!(t.entries.len(), 9);
        assert_eq!(t.get(&idx(&[2, -2])).unwrap().element, elt(s, &[(&[2, -2], "1"), (&[-2, 2], "q")]));
        assert_eq!(t.get(&idx(&[-2, 2])).unwrap().element, TensorElt::basis(s, idx(&[-2, 2])));
        assert_eq!(t.get(&idx(&[0, 0])).unwrap().element, TensorElt::basis(s, idx(&[0, 0])));
        let d = dual_canonical_a(3, 2).unwrap();
        assert_eq!(d.get(&idx(&[2, 0])).unwrap().element, elt(s, &[(&[2, 0], "1"), (&[0, 2], "-q^-1")]));
        t.verify().unwrap();
        d.verify().unwrap();
        // V itself: standard basis
        let v = canonical_basis_a(4, 1).unwrap();
        assert!(v.entries.iter().all(|e| e.element.terms().len() == 1));
    }

    #[test]
    fn icanonical_examples_on_v() {
        // N even, k = 1: {v_i, v_-i + q v_i}
        let v = TensorSpace::new(4, 1).unwrap();
        let t = icanonical_basis(4, 1, 1).unwrap();
        for i in [1, 3] {
            assert_eq!(t.get(&idx(&[i])).unwrap().element, TensorElt::basis(v, idx(&[i])));
            assert_eq!(t.get(&idx(&[-i])).unwrap().element, elt(v, &[(&[-i], "1"), (&[i], "q")]));
        }
        // N odd, k = 1: {v_0, v_i, v_-i + q v_i} and dual {v_0, v_i, v_-i - q^-1 v_i}
        let v = TensorSpace::new(3, 1).unwrap();
        let t = icanonical_basis(3, 1, 1).unwrap();
        let d = dual_icanonical(3, 1, 1).unwrap();
        assert_eq!(t.get(&idx(&[0])).unwrap().element, TensorElt::basis(v, idx(&[0])));
        assert_eq!(d.get(&idx(&[0])).unwrap().element, TensorElt::basis(v, idx(&[0])));
        assert_eq!(t.get(&idx(&[-2])).unwrap().element, elt(v, &[(&[-2], "1"), (&[2], "q")]));
        assert_eq!(d.get(&idx(&[-2])).unwrap().element, elt(v, &[(&[-2], "1"), (&[2], "-q^-1")]));
        // k = 0 on V: H_0 is an involution fixing every v_i, so the basis is standard
        let t = icanonical_basis(4, 1, 0).unwrap();
        assert!(t.entries.iter().all(|e| e.element.terms().len() == 1));
    }

    #[test]
    fn tables_are_order_independent() {
        for kind in [CanKind::Canonical, CanKind::DualICanonical(1), CanKind::ICanonical(0)] {
            let s = TensorSpace::new(3, 3).unwrap();
            let a = canonical_table_with(kind, s, false).unwrap();
            let b = canonical_table_with(kind, s, true).unwrap();
            assert_eq!(a, b);
            a.verify().unwrap();
        }
    }

    #[test]
    fn coincidences_small() {
        for (n, m) in [(2, 1), (3, 2), (2, 3), (4, 2)] {
            for r in [coincide_a(n, m), coincide_b(n, m), coincide_d(n, m)] {
                let r = r.unwrap();
                assert!(r.passed(), "{}", r.summary_line());
            }
        }
    }

    #[test]
    fn upsilon_and_theta_oracles() {
        let r = verify_upsilon_intertwine(3, 2, 1).unwrap();
        assert!(r.passed(), "{}", r.summary_line());
        let r = verify_upsilon_intertwine(2, 2, 1).unwrap();
        assert!(r.passed(), "{}", r.summary_line());
        for (n, m) in [(2, 2), (3, 2), (3, 3)] {
            let r = quasi_r_consistency(n, m).unwrap();
            assert!(r.passed(), "{}", r.summary_line());
        }
        // Υ fixes vectors that are both anti-dominant and ı-anti-dominant
        let s = TensorSpace::new(3, 2).unwrap();
        let x = TensorElt::basis(s, idx(&[0, 2]));
        assert_eq!(upsilon_module(&x, 1).unwrap(), x);
    }
}
