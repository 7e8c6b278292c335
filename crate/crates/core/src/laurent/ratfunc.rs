//! Rational functions in `q` over `Q`, kept in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::dense;
use super::{LaurentError, LaurentPoly};

/// `num / den` with `den` a polynomial of nonzero constant term and positive leading
/// coefficient, and `gcd(num, den) = 1` in `Q[q, q^-1]` with integer content removed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if any.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn bar(&self) -> Self {
        Self::normalize(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (n, sn) = dense::from_laurent(&num);
        let (d, sd) = dense::from_laurent(&den);
        let g = dense::gcd_primitive(&n, &d);
        let mut n = dense::div_exact(&n, &g).expect("gcd divides numerator");
        let mut d = dense::div_exact(&d, &g).expect("gcd divides denominator");
        let c = dense::content(&n).gcd(&dense::content(&d));
        let c = if d.last().unwrap().is_negative() { -c } else { c };
        for x in n.iter_mut() {
            *x = &*x / &c;
        }
        for x in d.iter_mut() {
            *x = &*x / &c;
        }
        RatFunc { num: dense::to_laurent(&n, sn - sd), den: dense::to_laurent(&d, 0) }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(BigInt::from(c)).into()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qint;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn normal_form_is_canonical() {
        // (q^2 - 1) / (2q - 2) = (q + 1) / 2
        let r = RatFunc::new(lp("-1 + q^2"), lp("-2 + 2*q")).unwrap();
        assert_eq!(r.numer(), &lp("1 + q"));
        assert_eq!(r.denom(), &lp("2"));
        // (q^-1 - q) / (q^-2 - q^2) = 1 / (q^-1 + q) = q / (1 + q^2)
        let r = RatFunc::new(lp("q^-1 - q"), lp("q^-2 - q^2")).unwrap();
        assert_eq!(r.numer(), &lp("q"));
        assert_eq!(r.denom(), &lp("1 + q^2"));
        let r = RatFunc::new(lp("q^3"), lp("-q")).unwrap();
        assert_eq!(r.as_laurent(), Some(lp("-q^2")));
    }

    #[test]
    fn field_operations() {
        let a = RatFunc::new(qint(3), qint(2)).unwrap();
        let b = RatFunc::new(lp("1 - q"), lp("1 + q^3")).unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a * &a.inv().unwrap(), RatFunc::one());
        assert_eq!(a.bar(), a);
        assert!(RatFunc::new(lp("1"), LaurentPoly::zero()).is_err());
    }
}
