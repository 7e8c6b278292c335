//! Laurent polynomials in `q` with arbitrary precision integer coefficients.

mod dense;
mod ratfunc;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("cannot parse Laurent polynomial: {0}")]
    Parse(String),
    #[error("polynomial is not antisymmetric under bar: {0}")]
    NotAntisymmetric(String),
    #[error("{0} is not divisible by {1}")]
    NotDivisible(String, String),
    #[error("division by zero")]
    DivisionByZero,
}

/// Which half-lattice a correction term lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lattice {
    /// `q Z[q]`
    Positive,
    /// `q^-1 Z[q^-1]`
    Negative,
}

impl Lattice {
    pub fn contains(self, p: &LaurentPoly) -> bool {
        match self {
            Lattice::Positive => p.terms.iter().all(|(e, _)| *e >= 1),
            Lattice::Negative => p.terms.iter().all(|(e, _)| *e <= -1),
        }
    }

    pub fn flip(self) -> Lattice {
        match self {
            Lattice::Positive => Lattice::Negative,
            Lattice::Negative => Lattice::Positive,
        }
    }
}

/// Sparse Laurent polynomial. Terms are sorted by exponent and never zero.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        LaurentPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        match self.terms.binary_search_by_key(&e, |(x, _)| *x) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Largest absolute coefficient, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_default()
    }

    /// Returns `(c, e)` if the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&BigInt, i32)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, *e)),
            _ => None,
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    /// `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Evaluates at an integer point `q = x` (with `x != 0` when negative exponents occur).
    /// Returns numerator and denominator `x^s` with `s >= 0`.
    pub fn eval_integer(&self, x: &BigInt) -> (BigInt, BigInt) {
        let shift = self.min_exp().unwrap_or(0).min(0);
        let mut num = BigInt::zero();
        for (e, c) in &self.terms {
            num += c * num_traits::pow(x.clone(), (e - shift) as usize);
        }
        (num, num_traits::pow(x.clone(), (-shift) as usize))
    }

    /// Splits an antisymmetric `P` (`bar P = -P`) as `P = Q - bar Q` with `Q` in the given lattice.
    pub fn split_antisymmetric(&self, lattice: Lattice) -> Result<LaurentPoly, LaurentError> {
        if self.bar() != -self {
            return Err(LaurentError::NotAntisymmetric(self.to_string()));
        }
        let q = match lattice {
            Lattice::Positive => self.terms.iter().filter(|(e, _)| *e > 0).cloned().collect(),
            Lattice::Negative => self.terms.iter().filter(|(e, _)| *e < 0).cloned().collect(),
        };
        Ok(LaurentPoly { terms: q })
    }

    /// Exact quotient in `Z[q, q^-1]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if d.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (a, sa) = dense::from_laurent(self);
        let (b, sb) = dense::from_laurent(d);
        match dense::div_exact(&a, &b) {
            Some(quot) => Ok(dense::to_laurent(&quot, sa - sb)),
            None => Err(LaurentError::NotDivisible(self.to_string(), d.to_string())),
        }
    }

    fn add_signed(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left =
                j >= other.terms.len() || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right =
                i >= self.terms.len() || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &other.terms[j];
                out.push((*e, if negate { -c } else { c.clone() }));
                j += 1;
            } else {
                let (e, c) = &self.terms[i];
                let d = &other.terms[j].1;
                let s = if negate { c - d } else { c + d };
                if !s.is_zero() {
                    out.push((*e, s));
                }
                i += 1;
                j += 1;
            }
        }
        LaurentPoly { terms: out }
    }
}

/// Quantum integer `[n] = (q^n - q^-n) / (q - q^-1)`.
pub fn qint(n: i32) -> LaurentPoly {
    if n < 0 {
        return -qint(-n);
    }
    LaurentPoly::from_terms((0..n).map(|i| (n - 1 - 2 * i, 1)))
}

/// `[n]! = [1][2]...[n]`.
pub fn qfactorial(n: u32) -> LaurentPoly {
    (1..=n as i32).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i))
}

/// Quantum binomial `[n choose r]` for `0 <= r <= n`, zero otherwise.
pub fn qbinom(n: u32, r: u32) -> LaurentPoly {
    if r > n {
        return LaurentPoly::zero();
    }
    // [n, r] = q^{r-n} [n-1, r-1] + q^r [n-1, r]
    let mut row = vec![LaurentPoly::one()];
    for k in 1..=n {
        let mut next = vec![LaurentPoly::zero(); (k + 1) as usize];
        for j in 0..=k {
            let mut v = LaurentPoly::zero();
            if j >= 1 {
                v += row[(j - 1) as usize].shift(j as i32 - k as i32);
            }
            if j < k {
                v += row[j as usize].shift(j as i32);
            }
            next[j as usize] = v;
        }
        row = next;
    }
    row[r as usize].clone()
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_signed(rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_signed(rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((c, e)) = rhs.as_monomial() {
            return self.shift(e).scale(c);
        }
        if let Some((c, e)) = self.as_monomial() {
            return rhs.shift(e).scale(c);
        }
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(e1 + e2).or_default() += c1 * c2;
            }
        }
        LaurentPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_signed(rhs, false);
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self = self.add_signed(&rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_signed(rhs, true);
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self = self.add_signed(&rhs, true);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(qint(0), LaurentPoly::zero());
        assert_eq!(qint(1), LaurentPoly::one());
        assert_eq!(qint(3), lp("q^-2 + 1 + q^2"));
        assert_eq!(qint(-2), lp("-q^-1 - q"));
        // [n](q - q^-1) = q^n - q^-n
        let d = lp("-q^-1 + q");
        for n in 0..8 {
            assert_eq!(&qint(n) * &d, lp(&format!("q^{n}")) - lp(&format!("q^{}", -n)));
        }
    }

    #[test]
    fn binomials_match_factorial_ratio() {
        for n in 0..9 {
            for r in 0..=n {
                let num = qfactorial(n);
                let den = &qfactorial(r) * &qfactorial(n - r);
                assert_eq!(num.div_exact(&den).unwrap(), qbinom(n, r), "n={n} r={r}");
                assert!(qbinom(n, r).is_bar_invariant());
            }
        }
        assert_eq!(qbinom(2, 1), qint(2));
        assert_eq!(qbinom(4, 2), lp("q^-4 + q^-2 + 2 + q^2 + q^4"));
    }

    #[test]
    fn split_rejects_non_antisymmetric() {
        assert!(lp("q + 1").split_antisymmetric(Lattice::Positive).is_err());
        let p = lp("-2*q^-3 + q^-1 - q + 2*q^3");
        let qp = p.split_antisymmetric(Lattice::Positive).unwrap();
        assert_eq!(qp, lp("-q + 2*q^3"));
        let qn = p.split_antisymmetric(Lattice::Negative).unwrap();
        assert_eq!(qn, lp("-2*q^-3 + q^-1"));
        assert_eq!(&qn - &qn.bar(), p);
    }

    #[test]
    fn exact_division() {
        let a = lp("q^-3 - q^3");
        assert_eq!(a.div_exact(&lp("q^-1 - q")).unwrap(), qint(3));
        assert!(lp("1 + q").div_exact(&lp("2")).is_err());
        assert!(lp("1").div_exact(&LaurentPoly::zero()).is_err());
        assert_eq!(lp("3*q^5").div_exact(&lp("q^2")).unwrap(), lp("3*q^3"));
    }

    pub(crate) fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i32..=6, -5i64..=5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn bar_is_ring_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
        }

        #[test]
        fn split_roundtrip(a in arb_poly()) {
            let p = &a - &a.bar();
            for lat in [Lattice::Positive, Lattice::Negative] {
                let q = p.split_antisymmetric(lat).unwrap();
                prop_assert!(lat.contains(&q));
                prop_assert_eq!(&q - &q.bar(), p.clone());
            }
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn text_roundtrip(a in arb_poly()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
