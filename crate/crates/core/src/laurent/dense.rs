//! Dense integer polynomials, used for exact division and gcds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::LaurentPoly;

pub(crate) type Dense = Vec<BigInt>;

/// Writes `p = q^s * d(q)` with `d` a polynomial having nonzero constant term.
pub(crate) fn from_laurent(p: &LaurentPoly) -> (Dense, i32) {
    let Some(lo) = p.min_exp() else {
        return (Vec::new(), 0);
    };
    let hi = p.max_exp().unwrap();
    let mut d = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        d[(e - lo) as usize] = c.clone();
    }
    (d, lo)
}

pub(crate) fn to_laurent(d: &[BigInt], shift: i32) -> LaurentPoly {
    LaurentPoly::from_terms(
        d.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as i32 + shift, c.clone())),
    )
}

fn trim(mut a: Dense) -> Dense {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> Dense {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if a.last().unwrap().is_negative() { -c } else { c };
    a.iter().map(|x| x / &sign).collect()
}

/// Exact division in `Z[q]`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Dense> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if b.is_empty() {
        return None;
    }
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap().clone();
    let mut quot = vec![BigInt::zero(); r.len() - b.len() + 1];
    while !r.is_empty() && r.len() >= b.len() {
        let (qc, rem) = r.last().unwrap().div_rem(&lb);
        if !rem.is_zero() {
            return None;
        }
        let off = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[off + i] -= &qc * c;
        }
        quot[off] = qc;
        r = trim(r);
    }
    if r.is_empty() {
        Some(quot)
    } else {
        None
    }
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut r = trim(a.to_vec());
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let off = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[off + i] -= &lr * c;
        }
        r = trim(r);
        let g = content(&r);
        if !g.is_zero() && g != BigInt::from(1) {
            r = r.iter().map(|x| x / &g).collect();
        }
    }
    r
}

/// Primitive gcd in `Z[q]`, normalized with positive leading coefficient.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Dense {
    let mut x = primitive(&trim(a.to_vec()));
    let mut y = primitive(&trim(b.to_vec()));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}
