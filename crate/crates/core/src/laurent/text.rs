//! Text and JSON forms of Laurent polynomials.
//!
//! Text: `3*q^-2 + 1 + q^5`, ascending exponents, `0` for zero.
//! JSON: `{"terms": [[-2, 3], [0, 1], [5, 1]]}` with big coefficients as digit strings.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentError, LaurentPoly};

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{a}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{a}*q^{e}")?,
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| LaurentError::Parse(format!("{msg} in {text:?}"));
        let mut cur = Cursor { s: text.as_bytes(), pos: 0 };
        let mut terms: Vec<(i32, BigInt)> = Vec::new();
        if cur.peek().is_none() {
            return Err(err("empty input"));
        }
        let mut first = true;
        while cur.peek().is_some() {
            let mut sign = BigInt::one();
            if cur.eat(b'-') {
                sign = -sign;
            } else if !cur.eat(b'+') && !first {
                return Err(err("expected '+' or '-'"));
            }
            first = false;
            let coeff = match cur.digits() {
                Some(d) => {
                    let c: BigInt = d.parse().map_err(|_| err("bad coefficient"))?;
                    if cur.eat(b'*') && cur.peek() != Some(b'q') {
                        return Err(err("expected 'q' after '*'"));
                    }
                    Some(c)
                }
                None => None,
            };
            let exp = if cur.eat(b'q') {
                if cur.eat(b'^') {
                    let neg = if cur.eat(b'-') {
                        true
                    } else {
                        cur.eat(b'+');
                        false
                    };
                    let d = cur.digits().ok_or_else(|| err("missing exponent"))?;
                    let e: i32 = d.parse().map_err(|_| err("exponent out of range"))?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                }
            } else if coeff.is_some() {
                0
            } else {
                return Err(err("expected a term"));
            };
            terms.push((exp, sign * coeff.unwrap_or_else(BigInt::one)));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<(i32, JsonInt)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .iter()
            .map(|(e, c)| {
                let v = match c.to_i64() {
                    Some(x) => JsonInt::Small(x),
                    None => JsonInt::Big(c.to_string()),
                };
                (*e, v)
            })
            .collect();
        JsonPoly { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for (e, c) in raw.terms {
            let c = match c {
                JsonInt::Small(x) => BigInt::from(x),
                JsonInt::Big(s) => s.parse().map_err(D::Error::custom)?,
            };
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let p = LaurentPoly::from_terms([(-2, 3), (0, 1), (5, 1)]);
        assert_eq!(p.to_string(), "3*q^-2 + 1 + q^5");
        let p = LaurentPoly::from_terms([(-1, -1), (1, -2)]);
        assert_eq!(p.to_string(), "-q^-1 - 2*q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_variants() {
        let p: LaurentPoly = "q^1 + q^+2 - 3 *q^-1".parse().unwrap();
        assert_eq!(p, LaurentPoly::from_terms([(1, 1), (2, 1), (-1, -3)]));
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        assert_eq!("q - q".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
        for bad in ["", "q^", "3*", "1 2", "x", "+"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad}");
        }
    }

    #[test]
    fn json_roundtrip_with_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::from_terms([(-2, BigInt::from(3)), (4, big)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"terms":[[-2,3],[4,"123456789012345678901234567890"]]}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
