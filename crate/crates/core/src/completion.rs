//! Generic bar completion: turns a unitriangular bar involution into a bar-invariant basis.
//!
//! Given a family `b_0, ..., b_{n-1}` listed along a linear extension of the partial order,
//! and `bar(b_j) = b_j + sum_{i<j} r_ij b_i`, produces the unique `C_j = b_j + sum_{i<j} c_ij b_i`
//! with `bar(C_j) = C_j` and every `c_ij` in the requested lattice.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::laurent::{Lattice, LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompletionError {
    #[error("bar({index}) is not unitriangular: {reason}")]
    NotUnitriangular { index: String, reason: String },
    #[error("split failed at {index}: {source}")]
    Split {
        index: String,
        #[source]
        source: LaurentError,
    },
}

type Column = BTreeMap<usize, LaurentPoly>;

fn axpy(acc: &mut Column, a: &LaurentPoly, x: &Column) {
    for (k, v) in x {
        let e = acc.entry(*k).or_default();
        *e += a * v;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Runs the completion over `family` (a linear extension) with `bar_cols[j]` the expansion of
/// `bar(b_j)`. Returns the expansion of each `C_j` over the family.
pub fn bar_completion<K: Ord + Clone + Debug>(
    family: &[K],
    bar_cols: &[BTreeMap<K, LaurentPoly>],
    lattice: Lattice,
) -> Result<Vec<BTreeMap<K, LaurentPoly>>, CompletionError> {
    assert_eq!(family.len(), bar_cols.len(), "one bar column per family member");
    let pos: BTreeMap<&K, usize> = family.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut done: Vec<Column> = Vec::with_capacity(family.len());
    for (j, (key, col)) in family.iter().zip(bar_cols).enumerate() {
        let bad = |reason: String| CompletionError::NotUnitriangular { index: format!("{key:?}"), reason };
        let mut r = Column::new();
        for (k, v) in col {
            let i = *pos.get(k).ok_or_else(|| bad(format!("{k:?} is outside the family")))?;
            if i > j {
                return Err(bad(format!("{k:?} comes later in the order")));
            }
            r.insert(i, v.clone());
        }
        match r.remove(&j) {
            Some(d) if d.is_one() => {}
            other => return Err(bad(format!("diagonal coefficient {other:?}"))),
        }
        let mut out = Column::from([(j, LaurentPoly::one())]);
        while let Some((&t, p)) = r.iter().next_back() {
            let p = p.clone();
            let q = p
                .split_antisymmetric(lattice)
                .map_err(|source| CompletionError::Split { index: format!("{key:?}"), source })?;
            axpy(&mut r, &-&p, &done[t]);
            debug_assert!(!r.contains_key(&t));
            axpy(&mut out, &q, &done[t]);
        }
        done.push(out);
    }
    Ok(done.into_iter().map(|col| col.into_iter().map(|(i, v)| (family[i].clone(), v)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn rank_one_hecke() {
        // H_s: bar(H_s) = H_s + (q - q^-1) H_e
        let family = ["e", "s"];
        let cols =
            vec![BTreeMap::from([("e", lp("1"))]), BTreeMap::from([("s", lp("1")), ("e", lp("q - q^-1"))])];
        let c = bar_completion(&family, &cols, Lattice::Positive).unwrap();
        assert_eq!(c[1], BTreeMap::from([("s", lp("1")), ("e", lp("q"))]));
        let l = bar_completion(&family, &cols, Lattice::Negative).unwrap();
        assert_eq!(l[1], BTreeMap::from([("s", lp("1")), ("e", lp("-q^-1"))]));
    }

    #[test]
    fn rejects_bad_input() {
        let family = ["a", "b"];
        let later = vec![BTreeMap::from([("a", lp("1")), ("b", lp("q"))]), BTreeMap::from([("b", lp("1"))])];
        assert!(matches!(
            bar_completion(&family, &later, Lattice::Positive),
            Err(CompletionError::NotUnitriangular { .. })
        ));
        let symmetric =
            vec![BTreeMap::from([("a", lp("1"))]), BTreeMap::from([("b", lp("1")), ("a", lp("q + q^-1"))])];
        assert!(matches!(
            bar_completion(&family, &symmetric, Lattice::Positive),
            Err(CompletionError::Split { .. })
        ));
        let diag = vec![BTreeMap::from([("a", lp("q"))]), BTreeMap::from([("b", lp("1"))])];
        assert!(bar_completion(&family, &diag, Lattice::Positive).is_err());
    }
}
