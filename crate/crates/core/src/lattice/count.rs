//! Exact lattice-point enumeration by column scanning.
//!
//! A polygon is described by integer half-planes `a*x + b*y >= c`. For each integer
//! column `x` the admissible `y` range is obtained by exact floor/ceil division, and a
//! point is on the boundary iff it attains equality in at least one constraint.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::LatticePoint;
use crate::error::{narrow, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

#[derive(Clone, Debug)]
pub struct Constraints {
    planes: Vec<HalfPlane>,
    xmin: i128,
    xmax: i128,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeCounts {
    pub total: i64,
    pub boundary: i64,
    pub interior: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticePoints {
    pub boundary: Vec<LatticePoint>,
    pub interior: Vec<LatticePoint>,
}

impl LatticePoints {
    /// All points, lexicographically sorted.
    pub fn all(&self) -> Vec<LatticePoint> {
        let mut v: Vec<_> = self.boundary.iter().chain(&self.interior).copied().collect();
        v.sort_unstable();
        v
    }
}

struct Column {
    lo: i128,
    hi: i128,
    strict_lo: i128,
    strict_hi: i128,
    has_interior: bool,
}

impl Constraints {
    pub(crate) fn new(planes: Vec<HalfPlane>, xmin: i128, xmax: i128) -> Self {
        Constraints { planes, xmin, xmax }
    }

    /// Constraints of the dilation `k * P` for integer `k > 0`.
    pub fn dilate(&self, k: i64) -> Constraints {
        let k = k as i128;
        let planes = self.planes.iter().map(|h| HalfPlane { c: h.c * k, ..*h }).collect();
        // The x-extent of kP is k times the (possibly fractional) extent of P; the
        // rounded bounds below stay valid because emptier columns are skipped anyway.
        Constraints { planes, xmin: self.xmin * k - k, xmax: self.xmax * k + k }
    }

    fn column(&self, x: i128) -> Option<Column> {
        let mut col = Column {
            lo: i128::MIN,
            hi: i128::MAX,
            strict_lo: i128::MIN,
            strict_hi: i128::MAX,
            has_interior: true,
        };
        for h in &self.planes {
            let rhs = h.c - h.a * x;
            match h.b.signum() {
                1 => {
                    col.lo = col.lo.max(Integer::div_ceil(&rhs, &h.b));
                    col.strict_lo = col.strict_lo.max(Integer::div_floor(&rhs, &h.b) + 1);
                }
                -1 => {
                    col.hi = col.hi.min(Integer::div_floor(&rhs, &h.b));
                    col.strict_hi = col.strict_hi.min(Integer::div_ceil(&rhs, &h.b) - 1);
                }
                _ => {
                    if rhs > 0 {
                        return None;
                    }
                    if rhs == 0 {
                        col.has_interior = false;
                    }
                }
            }
        }
        (col.lo <= col.hi).then_some(col)
    }

    pub fn counts(&self) -> Result<LatticeCounts> {
        let (mut total, mut interior) = (0i128, 0i128);
        for x in self.xmin..=self.xmax {
            if let Some(col) = self.column(x) {
                total += col.hi - col.lo + 1;
                if col.has_interior && col.strict_lo <= col.strict_hi {
                    interior += col.strict_hi - col.strict_lo + 1;
                }
            }
        }
        Ok(LatticeCounts {
            total: narrow(total, "lattice point count")?,
            boundary: narrow(total - interior, "lattice point count")?,
            interior: narrow(interior, "lattice point count")?,
        })
    }

    pub fn points(&self) -> Result<LatticePoints> {
        let mut out = LatticePoints::default();
        for x in self.xmin..=self.xmax {
            let Some(col) = self.column(x) else { continue };
            for y in col.lo..=col.hi {
                let p = LatticePoint::new(narrow(x, "lattice point")?, narrow(y, "lattice point")?);
                if col.has_interior && col.strict_lo <= y && y <= col.strict_hi {
                    out.interior.push(p);
                } else {
                    out.boundary.push(p);
                }
            }
        }
        Ok(out)
    }
}
