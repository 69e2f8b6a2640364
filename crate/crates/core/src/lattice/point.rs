use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{narrow, Error, Result};

/// Largest admissible absolute coordinate of a stored lattice point. Keeps every
/// 2x2 determinant and dot product of stored points inside `i64`.
pub const COORD_LIMIT: i64 = 1 << 29;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// `det(self, other)`; positive when `other` lies anticlockwise of `self`.
    pub fn det(self, other: Self) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dot(self, other: Self) -> i64 {
        self.x * other.x + self.y * other.y
    }

    pub fn scale(self, k: i64) -> Result<Self> {
        Ok(LatticePoint::new(
            narrow(self.x as i128 * k as i128, "point scaling")?,
            narrow(self.y as i128 * k as i128, "point scaling")?,
        ))
    }

    pub(crate) fn check_limit(self) -> Result<Self> {
        if self.x.abs() > COORD_LIMIT || self.y.abs() > COORD_LIMIT {
            Err(Error::Overflow("lattice coordinate limit"))
        } else {
            Ok(self)
        }
    }

    pub fn to_rational(self) -> RationalPoint {
        RationalPoint { x: Rational::from_int(self.x), y: Rational::from_int(self.y) }
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from([x, y]: [i64; 2]) -> Self {
        LatticePoint { x, y }
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint { x, y }
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: Self) -> Self {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: Self) -> Self {
        LatticePoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> Self {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RationalPoint { x, y }
    }

    pub fn to_lattice(self) -> Option<LatticePoint> {
        Some(LatticePoint::new(self.x.to_integer()?, self.y.to_integer()?))
    }

    pub fn scale(self, k: i64) -> Result<Self> {
        Ok(RationalPoint::new(self.x.scale(k)?, self.y.scale(k)?))
    }

    pub fn checked_sub(self, o: Self) -> Result<Self> {
        Ok(RationalPoint::new(self.x.checked_sub(o.x)?, self.y.checked_sub(o.y)?))
    }

    pub fn det(self, o: Self) -> Result<Rational> {
        self.x.checked_mul(o.y)?.checked_sub(self.y.checked_mul(o.x)?)
    }
}

impl From<[Rational; 2]> for RationalPoint {
    fn from([x, y]: [Rational; 2]) -> Self {
        RationalPoint { x, y }
    }
}

impl From<RationalPoint> for [Rational; 2] {
    fn from(p: RationalPoint) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Returns `(g, kappa, lambda)` with `g = gcd(|a|,|b|) > 0` and `kappa*a - lambda*b = g`.
///
/// The certificate is normalized so that `0 <= lambda < |a|/g` whenever `a != 0`.
pub fn extended_gcd(a: i64, b: i64) -> Result<(i64, i64, i64)> {
    if a == 0 && b == 0 {
        return Err(Error::domain("extended_gcd(0, 0) is undefined"));
    }
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    let g = r0;
    let (mut kappa, mut lambda) = (s0, -t0);
    let (a_g, b_g) = (a as i128 / g, b as i128 / g);
    if a_g != 0 {
        let m = a_g.abs();
        let target = lambda.rem_euclid(m);
        let t = (target - lambda) / a_g;
        kappa += t * b_g;
        lambda = target;
    } else {
        kappa = 0;
        lambda = -(b as i128).signum();
    }
    debug_assert_eq!(kappa * a as i128 - lambda * b as i128, g);
    Ok((narrow(g, "gcd")?, narrow(kappa, "gcd certificate")?, narrow(lambda, "gcd certificate")?))
}

pub fn is_primitive(v: LatticePoint) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::domain("the zero vector is not a lattice direction"));
    }
    Ok(v.x.gcd(&v.y) == 1)
}
