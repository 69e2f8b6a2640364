use std::fmt;

use serde::{Deserialize, Serialize};

use super::{LatticePoint, Rational, RationalPoint};
use crate::error::{narrow, Error, Result};

/// A lattice automorphism `x -> M x` with `det M = ±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[[i64; 2]; 2]", into = "[[i64; 2]; 2]")]
pub struct UnimodularMap {
    m: [[i64; 2]; 2],
}

impl UnimodularMap {
    pub const IDENTITY: UnimodularMap = UnimodularMap { m: [[1, 0], [0, 1]] };

    pub fn new(m: [[i64; 2]; 2]) -> Result<Self> {
        let det = m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128;
        if det.abs() != 1 {
            return Err(Error::domain(format!("matrix {m:?} has determinant {det}, not ±1")));
        }
        Ok(UnimodularMap { m })
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn apply(&self, v: LatticePoint) -> Result<LatticePoint> {
        let [[a, b], [c, d]] = self.m;
        let x = a as i128 * v.x as i128 + b as i128 * v.y as i128;
        let y = c as i128 * v.x as i128 + d as i128 * v.y as i128;
        LatticePoint::new(narrow(x, "unimodular image")?, narrow(y, "unimodular image")?).check_limit()
    }

    pub fn apply_rational(&self, v: RationalPoint) -> Result<RationalPoint> {
        let [[a, b], [c, d]] = self.m;
        let row = |s: i64, t: i64| -> Result<Rational> {
            v.x.checked_mul(Rational::from_int(s))?.checked_add(v.y.checked_mul(Rational::from_int(t))?)
        };
        Ok(RationalPoint::new(row(a, b)?, row(c, d)?))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularMap) -> Result<UnimodularMap> {
        let (a, b) = (self.m, other.m);
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let v = a[i][0] as i128 * b[0][j] as i128 + a[i][1] as i128 * b[1][j] as i128;
                *cell = narrow(v, "map composition")?;
            }
        }
        UnimodularMap::new(out)
    }

    pub fn inverse(&self) -> UnimodularMap {
        let [[a, b], [c, d]] = self.m;
        let det = self.det();
        UnimodularMap { m: [[d * det, -b * det], [-c * det, a * det]] }
    }
}

impl TryFrom<[[i64; 2]; 2]> for UnimodularMap {
    type Error = Error;
    fn try_from(m: [[i64; 2]; 2]) -> Result<Self> {
        UnimodularMap::new(m)
    }
}

impl From<UnimodularMap> for [[i64; 2]; 2] {
    fn from(u: UnimodularMap) -> Self {
        u.m
    }
}

impl fmt::Display for UnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.m;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_unimodular() {
        assert!(UnimodularMap::new([[2, 0], [0, 1]]).is_err());
        assert!(UnimodularMap::new([[0, 1], [1, 0]]).is_ok());
    }

    #[test]
    fn inverse_and_compose() {
        let m = UnimodularMap::new([[2, 3], [1, 2]]).unwrap();
        assert_eq!(m.compose(&m.inverse()).unwrap(), UnimodularMap::IDENTITY);
        let r = UnimodularMap::new([[0, 1], [1, 0]]).unwrap();
        assert_eq!(r.inverse(), r);
        let v = LatticePoint::new(4, -7);
        assert_eq!(m.compose(&r).unwrap().apply(v).unwrap(), m.apply(r.apply(v).unwrap()).unwrap());
    }

    #[test]
    fn second_shear_images() {
        let psi2 = UnimodularMap::new([[1, 0], [-1, 1]]).unwrap();
        let p = 6;
        assert_eq!(psi2.apply(LatticePoint::new(1, 0)).unwrap(), LatticePoint::new(1, -1));
        assert_eq!(psi2.apply(LatticePoint::new(p, p + 1)).unwrap(), LatticePoint::new(p, 1));
        assert_eq!(psi2.apply(LatticePoint::new(-1, -1)).unwrap(), LatticePoint::new(-1, 0));
    }
}
