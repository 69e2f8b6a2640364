use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

/// `z_a z_b - z_c z_d` with `a + b = c + d`. Each pair is sorted and the plus
/// side is the smaller pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Binomial {
    pub plus: (LatticePoint, LatticePoint),
    pub minus: (LatticePoint, LatticePoint),
}

fn sorted(a: LatticePoint, b: LatticePoint) -> (LatticePoint, LatticePoint) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Binomial {
    pub fn new(plus: (LatticePoint, LatticePoint), minus: (LatticePoint, LatticePoint)) -> Result<Self> {
        let (s, t) = (plus.0 + plus.1, minus.0 + minus.1);
        if s != t {
            return Err(Error::domain(format!("not homogeneous: exponent sums {s} and {t} differ")));
        }
        let (p, m) = (sorted(plus.0, plus.1), sorted(minus.0, minus.1));
        if p == m {
            return Err(Error::domain("both monomials are equal".to_string()));
        }
        Ok(if p < m { Binomial { plus: p, minus: m } } else { Binomial { plus: m, minus: p } })
    }

    pub fn sum(&self) -> LatticePoint {
        self.plus.0 + self.plus.1
    }

    pub fn points(&self) -> [LatticePoint; 4] {
        [self.plus.0, self.plus.1, self.minus.0, self.minus.1]
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = |v: LatticePoint| format!("z({},{})", v.x, v.y);
        write!(f, "{}*{} - {}*{}", z(self.plus.0), z(self.plus.1), z(self.minus.0), z(self.minus.1))
    }
}

/// Parses `z(a,b)*z(c,d) - z(e,f)*z(g,h)`; whitespace is ignored.
impl FromStr for Binomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::domain(format!("malformed binomial '{s}'"));
        let (lhs, rhs) = compact.split_once(")-z(").map(|(l, r)| (format!("{l})"), format!("z({r}"))).ok_or_else(bad)?;
        let monomial = |m: &str| -> Result<(LatticePoint, LatticePoint)> {
            let (a, b) = m.split_once('*').ok_or_else(bad)?;
            Ok((variable(a).ok_or_else(bad)?, variable(b).ok_or_else(bad)?))
        };
        Binomial::new(monomial(&lhs)?, monomial(&rhs)?)
    }
}

fn variable(s: &str) -> Option<LatticePoint> {
    let inner = s.strip_prefix("z(")?.strip_suffix(')')?;
    let (x, y) = inner.split_once(',')?;
    Some(LatticePoint::new(x.parse().ok()?, y.parse().ok()?))
}
