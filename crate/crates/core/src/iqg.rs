//! The type AIII ıquantum group acting on `V^{⊗m}`, the type B Hecke action, ıSchur duality
//! checks and the rank-one quasi K-matrix.
//!
//! Labels are doubled as in [`crate::qtensor`]: for `N` even they are `0, ±2, ±4, ...`, for
//! `N` odd they are `±1, ±3, ...` (so `±1` stands for `±1/2`).

use std::collections::BTreeMap;

use crate::laurent::{qbinom, qfactorial, qint, LaurentPoly, RatFunc};
use crate::qtensor::{
    cartan, root_labels, serre_expr, GenMatrix, LiftedGens, TensorElt, TensorError, TensorIndex, TensorSpace,
};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IqgError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("{0} is not a generator label for N={1}")]
    BadLabel(i32, usize),
    #[error("the linear system for the quasi K-matrix is singular (rank {rank} < {unknowns})")]
    Singular { rank: usize, unknowns: usize },
    #[error("the linear system for the quasi K-matrix is inconsistent")]
    Inconsistent,
    #[error("degree {0} is above the supported maximum 12")]
    DegreeTooLarge(usize),
}

/// `N` and the exponent `k` of `p = q^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IParams {
    pub n: usize,
    pub k: i32,
}

impl IParams {
    pub fn new(n: usize, k: i32) -> Self {
        IParams { n, k }
    }

    fn p(&self, sign: i32) -> LaurentPoly {
        LaurentPoly::monomial(1, sign * self.k)
    }
}

/// Labels of the `B` generators.
pub fn b_labels(n: usize) -> Vec<i32> {
    root_labels(n)
}

/// Labels of the `k` generators (the positive ones).
pub fn k_labels(n: usize) -> Vec<i32> {
    root_labels(n).into_iter().filter(|&i| i > 0).collect()
}

/// Which generator an operator realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ILabel {
    B(i32),
    K(i32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IGenMatrix {
    pub label: ILabel,
    pub matrix: GenMatrix,
}

/// Generator images inside `U` together with their bar conjugates, all lifted to `V^{⊗m}`.
pub struct IGens {
    pub params: IParams,
    pub space: TensorSpace,
    pub b: BTreeMap<i32, GenMatrix>,
    /// `ψ(B_i)`: `q -> q^-1`, `K -> K^-1` applied to the defining expression.
    pub b_bar: BTreeMap<i32, GenMatrix>,
    pub k: BTreeMap<i32, GenMatrix>,
    pub k_inv: BTreeMap<i32, GenMatrix>,
}

impl IGens {
    pub fn new(params: IParams, m: usize) -> Result<Self, IqgError> {
        let space = TensorSpace::new(params.n, m)?;
        let g = LiftedGens::new(space)?;
        let n = params.n;
        let mut out = IGens {
            params,
            space,
            b: BTreeMap::new(),
            b_bar: BTreeMap::new(),
            k: BTreeMap::new(),
            k_inv: BTreeMap::new(),
        };
        let q = |e: i32| LaurentPoly::monomial(1, e);
        for i in b_labels(n) {
            let (e, f_op, k, kinv) = (&g.e[&i], &g.f[&-i], &g.k[&i], &g.kinv[&i]);
            let (b, bb) = if n.is_multiple_of(2) && i == 0 {
                let kappa = qint(params.k);
                let b = &(e + &f_op.compose(kinv).scale(&q(1))) + &kinv.scale(&kappa);
                let bb = &(e + &f_op.compose(k).scale(&q(-1))) + &k.scale(&kappa);
                (b, bb)
            } else if n % 2 == 1 && i == 1 {
                let b = e + &f_op.compose(kinv).scale(&params.p(-1));
                let bb = e + &f_op.compose(k).scale(&params.p(1));
                (b, bb)
            } else if n % 2 == 1 && i == -1 {
                let b = e + &kinv.compose(f_op).scale(&params.p(1));
                let bb = e + &k.compose(f_op).scale(&params.p(-1));
                (b, bb)
            } else {
                (e + &f_op.compose(kinv), e + &f_op.compose(k))
            };
            out.b.insert(i, b);
            out.b_bar.insert(i, bb);
        }
        for i in k_labels(n) {
            out.k.insert(i, g.k[&i].compose(&g.kinv[&-i]));
            out.k_inv.insert(i, g.kinv[&i].compose(&g.k[&-i]));
        }
        Ok(out)
    }

    /// All generators as labelled operators: every `B_i`, then every `k_i`.
    pub fn all(&self) -> Vec<IGenMatrix> {
        let bs = self.b.iter().map(|(&i, x)| IGenMatrix { label: ILabel::B(i), matrix: x.clone() });
        let ks = self.k.iter().map(|(&i, x)| IGenMatrix { label: ILabel::K(i), matrix: x.clone() });
        bs.chain(ks).collect()
    }
}

/// `B_i` on `V^{⊗m}`.
pub fn b_matrix(params: IParams, i: i32, m: usize) -> Result<IGenMatrix, IqgError> {
    let gens = IGens::new(params, m)?;
    let matrix = gens.b.get(&i).cloned().ok_or(IqgError::BadLabel(i, params.n))?;
    Ok(IGenMatrix { label: ILabel::B(i), matrix })
}

/// `k_i = K_i K_{-i}^-1` on `V^{⊗m}`, for `i > 0`.
pub fn k_matrix(params: IParams, i: i32, m: usize) -> Result<IGenMatrix, IqgError> {
    let gens = IGens::new(params, m)?;
    let matrix = gens.k.get(&i).cloned().ok_or(IqgError::BadLabel(i, params.n))?;
    Ok(IGenMatrix { label: ILabel::K(i), matrix })
}

/// Right action of `H_i` (`0 <= i < m`) of `H_{p,q}(B_m)` on `M_f`.
pub fn hecke_action_b(space: TensorSpace, f: &TensorIndex, i: usize, k: i32) -> TensorElt {
    if i > 0 {
        return crate::qtensor::hecke_action_a(space, f, i);
    }
    let a = f.0[0];
    let flipped = f.with(0, -a);
    let p = LaurentPoly::monomial(1, k);
    match a.cmp(&0) {
        std::cmp::Ordering::Greater => TensorElt::basis(space, flipped),
        std::cmp::Ordering::Less => {
            TensorElt::from_terms(space, [(flipped, LaurentPoly::one()), (f.clone(), &p.bar() - &p)])
        }
        std::cmp::Ordering::Equal => TensorElt::from_terms(space, [(f.clone(), p.bar())]),
    }
}

/// The operator `x -> x H_i` for the type B action.
pub fn hecke_matrix_b(space: TensorSpace, i: usize, k: i32) -> GenMatrix {
    GenMatrix::from_fn(space, |f| hecke_action_b(space, f, i, k))
}

fn commutator(a: &GenMatrix, b: &GenMatrix) -> GenMatrix {
    &a.compose(b) - &b.compose(a)
}

fn label_name(l: ILabel) -> String {
    match l {
        ILabel::B(i) => format!("B_{i}"),
        ILabel::K(i) => format!("k_{i}"),
    }
}

/// Every `B_i` and `k_i` commutes with every `H_j` of the type B action.
pub fn verify_ischur_commute(params: IParams, m: usize) -> Result<Report, IqgError> {
    let gens = IGens::new(params, m)?;
    let mut rep = Report::new("ischur-commute").param("N", params.n).param("m", m).param("k", params.k);
    for j in 0..m {
        let h = hecke_matrix_b(gens.space, j, params.k);
        for x in gens.all() {
            let c = commutator(&x.matrix, &h);
            rep.record(c.is_zero(), || {
                format!("[{}, H_{j}] has max-norm {}", label_name(x.label), c.max_norm())
            });
        }
    }
    Ok(rep)
}

/// Relations of the Serre presentation of the ıquantum group, as operator identities.
pub fn verify_serre_i(params: IParams, m: usize) -> Result<Report, IqgError> {
    let g = IGens::new(params, m)?;
    let n = params.n;
    let space = g.space;
    let id = GenMatrix::identity(space);
    let mut rep = Report::new("serre-i").param("N", n).param("m", m).param("k", params.k);
    let q = |e: i32| LaurentPoly::monomial(1, e);
    let qdiff: LaurentPoly = "-q^-1 + q".parse().unwrap();
    let ks = k_labels(n);
    let bs = b_labels(n);
    for &i in &ks {
        rep.record(g.k[&i].compose(&g.k_inv[&i]) == id, || format!("k_{i} k_{i}^-1 != 1"));
        for &j in &ks {
            rep.record(commutator(&g.k[&i], &g.k[&j]).is_zero(), || format!("k_{i}, k_{j}"));
        }
        for &j in &bs {
            let e = cartan(i, j) - cartan(-i, j);
            let lhs = GenMatrix::product(space, &[&g.k[&i], &g.b[&j], &g.k_inv[&i]]);
            rep.record(lhs == g.b[&j].scale(&q(e)), || format!("k_{i} B_{j} k_{i}^-1 != q^{e} B_{j}"));
        }
        if n % 2 == 1 && i == 1 {
            // B_{±1/2} are adjacent; they satisfy the deformed Serre relations below instead
            continue;
        }
        let lhs = commutator(&g.b[&i], &g.b[&-i]);
        let rhs = (&g.k[&i] - &g.k_inv[&i]).div_exact(&qdiff)?;
        rep.record(lhs == rhs, || format!("[B_{i}, B_{}] != (k - k^-1)/(q - q^-1)", -i));
    }
    for &i in &bs {
        for &j in &bs {
            if i == j {
                continue;
            }
            let adjacent = (i - j).abs() == 2;
            if j != -i && !adjacent {
                rep.record(commutator(&g.b[&i], &g.b[&j]).is_zero(), || {
                    format!("B_{i}, B_{j} do not commute")
                });
                continue;
            }
            if !adjacent {
                continue;
            }
            let s = serre_expr(&g.b[&i], &g.b[&j]);
            if n.is_multiple_of(2) {
                let expect = if i == 0 { g.b[&j].clone() } else { GenMatrix::zero(space) };
                rep.record(s == expect, || format!("Serre relation for (B_{i}, B_{j})"));
            } else if (i, j) == (1, -1) || (i, j) == (-1, 1) {
                // -[2] B_{1/2} (pq k + p^-1 q^-1 k^-1), and the mirrored form for B_{-1/2}
                let pq = q(params.k + 1);
                let corr = &g.k[&1].scale(&pq) + &g.k_inv[&1].scale(&pq.bar());
                let expect = if i == 1 { g.b[&1].compose(&corr) } else { corr.compose(&g.b[&-1]) };
                let expect = expect.scale(&-qint(2));
                rep.record(s == expect, || format!("deformed Serre relation for (B_{i}, B_{j})"));
            } else {
                rep.record(s.is_zero(), || format!("Serre relation for (B_{i}, B_{j})"));
            }
        }
    }
    // braid relation of the type B action
    if m >= 2 {
        let h0 = hecke_matrix_b(space, 0, params.k);
        let h1 = hecke_matrix_b(space, 1, params.k);
        let l = GenMatrix::product(space, &[&h0, &h1, &h0, &h1]);
        let r = GenMatrix::product(space, &[&h1, &h0, &h1, &h0]);
        rep.record(l == r, || "H_0 H_1 H_0 H_1 != H_1 H_0 H_1 H_0".into());
    }
    Ok(rep)
}

/// Dense square matrix over `Z[q, q^-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LMatrix {
    pub rows: Vec<Vec<LaurentPoly>>,
}

impl LMatrix {
    pub fn zero(n: usize) -> Self {
        LMatrix { rows: vec![vec![LaurentPoly::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.rows[i][i] = LaurentPoly::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &LMatrix) -> LMatrix {
        let n = self.dim();
        let mut out = Self::zero(n);
        for i in 0..n {
            for l in 0..n {
                if self.rows[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !other.rows[l][j].is_zero() {
                        out.rows[i][j] += &self.rows[i][l] * &other.rows[l][j];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &LMatrix) -> LMatrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LMatrix) -> LMatrix {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &LaurentPoly) -> LMatrix {
        LMatrix { rows: self.rows.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() }
    }

    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LMatrix, IqgError> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.div_exact(d)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(TensorError::from)?;
        Ok(LMatrix { rows })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    fn zip(&self, other: &LMatrix, f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly) -> LMatrix {
        LMatrix {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
                .collect(),
        }
    }
}

/// The `(λ+1)`-dimensional irreducible `U_q(sl_2)`-module on `u_0, ..., u_λ`.
#[derive(Debug, Clone)]
pub struct Sl2Rep {
    pub lambda: usize,
    pub e: LMatrix,
    pub f: LMatrix,
    pub k: LMatrix,
    pub k_inv: LMatrix,
}

/// `E u_j = [j] u_{j-1}`, `F u_j = [λ-j] u_{j+1}`, `K u_j = q^{λ-2j} u_j`.
pub fn rep_sl2(lambda: usize) -> Sl2Rep {
    let n = lambda + 1;
    let (mut e, mut f, mut k, mut k_inv) =
        (LMatrix::zero(n), LMatrix::zero(n), LMatrix::zero(n), LMatrix::zero(n));
    let l = lambda as i32;
    for j in 0..n {
        let ji = j as i32;
        if j >= 1 {
            e.rows[j - 1][j] = qint(ji);
        }
        if j < lambda {
            f.rows[j + 1][j] = qint(l - ji);
        }
        k.rows[j][j] = LaurentPoly::monomial(1, l - 2 * ji);
        k_inv.rows[j][j] = LaurentPoly::monomial(1, 2 * ji - l);
    }
    Sl2Rep { lambda, e, f, k, k_inv }
}

/// Solves `A x = b` over `Q(q)`; requires full column rank and consistency.
#[allow(clippy::needless_range_loop)]
pub fn solve_linear(mut a: Vec<Vec<RatFunc>>, mut b: Vec<RatFunc>) -> Result<Vec<RatFunc>, IqgError> {
    let unknowns = a.first().map_or(0, |r| r.len());
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].inv().expect("pivot is nonzero");
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        b[row] = &b[row] * &inv;
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..unknowns {
                    if !a[row][c].is_zero() {
                        a[r][c] = &a[r][c] - &(&factor * &a[row][c]);
                    }
                }
                b[r] = &b[r] - &(&factor * &b[row]);
            }
        }
        pivots.push(col);
        row += 1;
    }
    if b[row..].iter().any(|x| !x.is_zero()) {
        return Err(IqgError::Inconsistent);
    }
    if pivots.len() < unknowns {
        return Err(IqgError::Singular { rank: pivots.len(), unknowns });
    }
    Ok(b.into_iter().take(unknowns).collect())
}

/// Divided powers `F^(n)` for `n = 0..=d` on the given representation.
fn divided_powers(rep: &Sl2Rep, d: usize) -> Result<Vec<LMatrix>, IqgError> {
    let mut out = Vec::with_capacity(d + 1);
    let mut power = LMatrix::identity(rep.lambda + 1);
    for n in 0..=d {
        out.push(power.div_exact(&qfactorial(n as u32))?);
        power = rep.f.mul(&power);
    }
    Ok(out)
}

/// Coefficients `c_0..c_d` of the rank-one quasi K-matrix `Υ = Σ c_n F^(n)` for
/// `B = E + q F K^-1 + [k] K^-1`, solved on the irreducible of highest weight `lambda >= d`.
pub fn quasi_k_rank1_at(k: i32, d: usize, lambda: usize) -> Result<Vec<RatFunc>, IqgError> {
    if d > 12 {
        return Err(IqgError::DegreeTooLarge(d));
    }
    assert!(lambda >= d, "the oracle weight must be at least the degree");
    let rep = rep_sl2(lambda);
    let q = |e: i32| LaurentPoly::monomial(1, e);
    let kappa = qint(k);
    let b = rep.e.add(&rep.f.mul(&rep.k_inv).scale(&q(1))).add(&rep.k_inv.scale(&kappa));
    let b_bar = rep.e.add(&rep.f.mul(&rep.k).scale(&q(-1))).add(&rep.k.scale(&kappa));
    // every F^(n) with n <= λ acts nonzero, so all of them are unknowns
    let fs = divided_powers(&rep, lambda)?;
    let residuals: Vec<LMatrix> = fs.iter().map(|x| b.mul(x).sub(&x.mul(&b_bar))).collect();
    let dim = lambda + 1;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for r in 0..dim {
        for s in 0..dim {
            let coeffs: Vec<RatFunc> =
                (1..=lambda).map(|n| RatFunc::from(residuals[n].rows[r][s].clone())).collect();
            let target = RatFunc::from(-&residuals[0].rows[r][s]);
            if coeffs.iter().any(|c| !c.is_zero()) || !target.is_zero() {
                rows.push(coeffs);
                rhs.push(target);
            }
        }
    }
    let mut out = vec![RatFunc::one()];
    if lambda > 0 {
        out.extend(solve_linear(rows, rhs)?);
    }
    out.truncate(d + 1);
    Ok(out)
}

/// [`quasi_k_rank1_at`] with the smallest oracle weight `λ = d`.
pub fn quasi_k_rank1(k: i32, d: usize) -> Result<Vec<RatFunc>, IqgError> {
    quasi_k_rank1_at(k, d, d)
}

/// Coefficients of `Υ bar(Υ)` on `F^(n)` for `n <= d`, using
/// `F^(a) F^(b) = [a+b choose a] F^(a+b)`.
pub fn upsilon_times_bar(c: &[LaurentPoly]) -> Vec<LaurentPoly> {
    (0..c.len())
        .map(|n| (0..=n).map(|a| &(&c[a] * &c[n - a].bar()) * &qbinom(n as u32, a as u32)).sum())
        .collect()
}

/// Integrality, `Υ bar(Υ) = 1` up to degree `d`, and independence of the oracle weight.
pub fn verify_quasi_k(k: i32, d: usize) -> Result<Report, IqgError> {
    let mut rep = Report::new("quasi-k").param("k", k).param("d", d);
    let c = quasi_k_rank1(k, d)?;
    rep.record(c[0] == RatFunc::one(), || "c_0 != 1".into());
    let laurent: Vec<Option<LaurentPoly>> = c.iter().map(|x| x.as_laurent()).collect();
    for (n, x) in laurent.iter().enumerate() {
        rep.record(x.is_some(), || format!("c_{n} = {} is not a Laurent polynomial", c[n]));
    }
    if laurent.iter().all(|x| x.is_some()) {
        let cs: Vec<LaurentPoly> = laurent.into_iter().map(|x| x.unwrap()).collect();
        for (n, x) in upsilon_times_bar(&cs).iter().enumerate() {
            let expect = if n == 0 { LaurentPoly::one() } else { LaurentPoly::zero() };
            rep.record(*x == expect, || format!("Υ bar(Υ) has {x} on F^({n})"));
        }
    }
    let wider = quasi_k_rank1_at(k, d, d + 2)?;
    rep.record(wider == c, || format!("solutions differ between λ={d} and λ={}", d + 2));
    Ok(rep)
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

    #[test]
    fn generator_shapes() {
        // k = 0: B_0 has no K^-1 term
        let b = b_matrix(IParams::new(2, 0), 0, 1).unwrap().matrix;
        let s = TensorSpace::new(2, 1).unwrap();
        assert_eq!(b.column(&idx(&[-1])), TensorElt::from_terms(s, [(idx(&[1]), lp("1"))]));
        let b = b_matrix(IParams::new(2, 1), 0, 1).unwrap().matrix;
        let expect = TensorElt::from_terms(s, [(idx(&[1]), lp("1")), (idx(&[-1]), lp("q^-1"))]);
        assert_eq!(b.column(&idx(&[-1])), expect);
        assert!(b_matrix(IParams::new(3, 1), 0, 1).is_err());
        assert!(k_matrix(IParams::new(3, 1), -1, 1).is_err());
        // N = 3, m = 1, k = 1: explicit columns of B_{±1/2}
        let s = TensorSpace::new(3, 1).unwrap();
        let bp = b_matrix(IParams::new(3, 1), 1, 1).unwrap().matrix;
        let bm = b_matrix(IParams::new(3, 1), -1, 1).unwrap().matrix;
        assert_eq!(bp.column(&idx(&[2])), TensorElt::basis(s, idx(&[0])));
        assert_eq!(bp.column(&idx(&[-2])), TensorElt::from_terms(s, [(idx(&[0]), lp("q^-1"))]));
        assert_eq!(bp.column(&idx(&[0])), TensorElt::zero(s));
        assert_eq!(
            bm.column(&idx(&[0])),
            TensorElt::from_terms(s, [(idx(&[-2]), lp("1")), (idx(&[2]), lp("q"))])
        );
        let k = k_matrix(IParams::new(3, 1), 1, 2).unwrap().matrix;
        assert_eq!(k.entry(&idx(&[-2, 2]), &idx(&[-2, 2])), lp("q^-2"));
        assert_eq!(k.entry(&idx(&[0, 0]), &idx(&[0, 0])), lp("q^4"));
    }

    #[test]
    fn type_b_hecke_quadratic() {
        for n in [3, 4] {
            for m in 1..=3 {
                for k in 0..=2 {
                    let s = TensorSpace::new(n, m).unwrap();
                    let h0 = hecke_matrix_b(s, 0, k);
                    let id = GenMatrix::identity(s);
                    let p = LaurentPoly::monomial(1, k);
                    let a = h0.add_scaled(&id, &p);
                    let b = h0.add_scaled(&id, &-&p.bar());
                    assert!(a.compose(&b).is_zero(), "N={n} m={m} k={k}");
                }
            }
        }
        let s = TensorSpace::new(3, 1).unwrap();
        assert_eq!(hecke_action_b(s, &idx(&[0]), 0, 2), TensorElt::from_terms(s, [(idx(&[0]), lp("q^-2"))]));
        assert_eq!(hecke_action_b(s, &idx(&[2]), 0, 2), TensorElt::basis(s, idx(&[-2])));
    }

    #[test]
    fn ischur_and_serre_small() {
        for (n, m, k) in [(2, 2, 1), (3, 2, 0), (3, 2, 1), (4, 2, 1), (3, 3, 0), (4, 2, 2), (5, 2, 2)] {
            let p = IParams::new(n, k);
            let r = verify_ischur_commute(p, m).unwrap();
            assert!(r.passed(), "{}", r.summary_line());
            let r = verify_serre_i(p, m).unwrap();
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn sl2_reps() {
        let r0 = rep_sl2(0);
        assert!(r0.e.is_zero() && r0.f.is_zero());
        let qdiff = lp("q - q^-1");
        for lambda in 0..6 {
            let r = rep_sl2(lambda);
            let lhs = r.e.mul(&r.f).sub(&r.f.mul(&r.e));
            let rhs = r.k.sub(&r.k_inv).div_exact(&qdiff).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(r.k.mul(&r.e), r.e.mul(&r.k).scale(&lp("q^2")));
        }
        // λ = 1 is V for N = 2 with u_0 = v_{-1}, u_1 = v_1
        let r = rep_sl2(1);
        let f = crate::qtensor::act_f(2, 0).unwrap();
        assert_eq!(r.f.rows[1][0], f.entry(&idx(&[1]), &idx(&[-1])));
    }

    #[test]
    fn quasi_k_first_coefficient() {
        for k in -1..=3 {
            let c = quasi_k_rank1(k, 3).unwrap();
            assert_eq!(c[0], RatFunc::one());
            let expect = &LaurentPoly::monomial(1, k) - &LaurentPoly::monomial(1, -k);
            assert_eq!(c[1].as_laurent(), Some(expect), "k={k}");
        }
        assert!(quasi_k_rank1(1, 13).is_err());
    }

    #[test]
    fn quasi_k_checks() {
        for k in 0..=2 {
            let r = verify_quasi_k(k, 5).unwrap();
            assert!(r.passed(), "{}", r.summary_line());
        }
    }

    #[test]
    fn linear_solver() {
        let r = |s: &str| RatFunc::from(lp(s));
        let a = vec![vec![r("1"), r("q")], vec![r("q"), r("1")], vec![r("2"), r("q + 1")]];
        // x = 1, y = q^-1 gives rhs 2, q + q^-1, 3 + q^-1
        let b = vec![r("2"), r("q + q^-1"), r("3 + q^-1")];
        let x = solve_linear(a.clone(), b).unwrap();
        assert_eq!(x, vec![r("1"), r("q^-1")]);
        let bad = vec![r("2"), r("q + q^-1"), r("7")];
        assert_eq!(solve_linear(a, bad), Err(IqgError::Inconsistent));
        let sing = vec![vec![r("1"), r("1")], vec![r("2"), r("2")]];
        assert!(matches!(solve_linear(sing, vec![r("1"), r("2")]), Err(IqgError::Singular { .. })));
    }
}
