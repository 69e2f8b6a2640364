use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{narrow, Error, Result};

/// Exact rational number with a positive denominator, always in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_wide(num as i128, den as i128)
    }

    pub fn from_int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub(crate) fn from_wide(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("zero denominator"));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Rational {
            num: narrow(num, "rational numerator")?,
            den: narrow(den, "rational denominator")?,
        })
    }

    pub fn numer(self) -> i64 {
        self.num
    }

    pub fn denom(self) -> i64 {
        self.den
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.num)
    }

    pub fn floor(self) -> i64 {
        Integer::div_floor(&self.num, &self.den)
    }

    pub fn ceil(self) -> i64 {
        -Integer::div_floor(&-self.num, &self.den)
    }

    pub fn checked_add(self, o: Self) -> Result<Self> {
        let (a, b, c, d) = self.wide(o);
        Self::from_wide(a * d + c * b, b * d)
    }

    pub fn checked_sub(self, o: Self) -> Result<Self> {
        let (a, b, c, d) = self.wide(o);
        Self::from_wide(a * d - c * b, b * d)
    }

    pub fn checked_mul(self, o: Self) -> Result<Self> {
        let (a, b, c, d) = self.wide(o);
        Self::from_wide(a * c, b * d)
    }

    pub fn checked_div(self, o: Self) -> Result<Self> {
        if o.num == 0 {
            return Err(Error::domain("division by zero"));
        }
        let (a, b, c, d) = self.wide(o);
        Self::from_wide(a * d, b * c)
    }


    pub fn scale(self, k: i64) -> Result<Self> {
        Self::from_wide(self.num as i128 * k as i128, self.den as i128)
    }

    fn wide(self, o: Self) -> (i128, i128, i128, i128) {
        (self.num as i128, self.den as i128, o.num as i128, o.den as i128)
    }
}

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, c, d) = self.wide(*other);
        (a * d).cmp(&(c * b))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("not a fraction: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse::<i64>().map_err(|_| bad())?;
                let d = d.trim().parse::<i64>().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => s.trim().parse::<i64>().map(Rational::from_int).map_err(|_| bad()),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_gcd() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(Rational::new(0, -7).unwrap(), Rational::ZERO);
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn floor_and_ceil() {
        let r = Rational::new(-7, 2).unwrap();
        assert_eq!(r.floor(), -4);
        assert_eq!(r.ceil(), -3);
        assert_eq!(Rational::from_int(5).ceil(), 5);
    }

    #[test]
    fn arithmetic_and_order() {
        let a = Rational::new(1, 3).unwrap();
        let b = Rational::new(1, 6).unwrap();
        assert_eq!(a.checked_add(b).unwrap(), Rational::new(1, 2).unwrap());
        assert_eq!(a.checked_div(b).unwrap(), Rational::from_int(2));
        assert!(b < a);
        assert!(a.checked_div(Rational::ZERO).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::from_int(i64::MAX);
        assert_eq!(big.checked_mul(big), Err(Error::Overflow("rational numerator")));
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["-2/5", "7", "0"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        let json = serde_json::to_string(&Rational::new(3, 4).unwrap()).unwrap();
        assert_eq!(json, "\"3/4\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Rational::new(3, 4).unwrap());
    }
}
