//! Complete fans in the plane: weights of the torus-invariant curves, the minimal
//! desingularization, the self-intersection of the canonical divisor and star
//! subdivisions.
//!
//! Indices are 0-based throughout; cone `i` is `cone(n_i, n_{i+1})` with `n_ν = n_0`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cones::{cone_invariants, Cone2, ConeData};
use crate::error::{Error, Result};
use crate::lattice::{is_primitive, LatticePoint, LatticePolygon, Rational, UnimodularMap};

/// Exact angular order on nonzero vectors, starting at the positive x-axis.
pub fn angle_cmp(a: LatticePoint, b: LatticePoint) -> Ordering {
    let half = |v: LatticePoint| u8::from(!(v.y > 0 || (v.y == 0 && v.x > 0)));
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&a.det(b)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<LatticePoint>", into = "Vec<LatticePoint>")]
pub struct CompleteFan {
    rays: Vec<LatticePoint>,
}

impl CompleteFan {
    /// Rays must be primitive, in anticlockwise order, and wind around the origin once.
    pub fn new(rays: Vec<LatticePoint>) -> Result<Self> {
        let nu = rays.len();
        if nu < 3 {
            return Err(Error::InvalidFan(format!("a complete fan needs at least 3 rays, got {nu}")));
        }
        for &r in &rays {
            r.check_limit()?;
            if !is_primitive(r)? {
                return Err(Error::InvalidFan(format!("ray {r} is not primitive")));
            }
        }
        let mut wraps = 0;
        for i in 0..nu {
            let (a, b) = (rays[i], rays[(i + 1) % nu]);
            if a.det(b) <= 0 {
                return Err(Error::InvalidFan(format!("det({a}, {b}) <= 0")));
            }
            if angle_cmp(b, a) == Ordering::Less {
                wraps += 1;
            }
        }
        if wraps != 1 {
            return Err(Error::InvalidFan(format!("rays wind around the origin {wraps} times")));
        }
        Ok(CompleteFan { rays })
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn cone(&self, i: usize) -> Result<Cone2> {
        Cone2::new(self.rays[i], self.rays[(i + 1) % self.len()])
    }

    /// Picard number `ν - 2`.
    pub fn picard(&self) -> i64 {
        self.len() as i64 - 2
    }

    /// The same fan with rays listed from `ray` on.
    pub fn rotated_to(&self, ray: LatticePoint) -> Result<Self> {
        let at = self
            .rays
            .iter()
            .position(|&r| r == ray)
            .ok_or_else(|| Error::domain(format!("{ray} is not a ray of the fan")))?;
        let mut rays = self.rays.clone();
        rays.rotate_left(at);
        Ok(CompleteFan { rays })
    }

    /// Image under `m`; the ray order is reversed when `det m = -1` to stay anticlockwise.
    pub fn apply_map(&self, m: &UnimodularMap) -> Result<Self> {
        let mut rays = self.rays.iter().map(|&r| m.apply(r)).collect::<Result<Vec<_>>>()?;
        if m.det() < 0 {
            rays.reverse();
        }
        CompleteFan::new(rays)
    }
}

impl TryFrom<Vec<LatticePoint>> for CompleteFan {
    type Error = Error;
    fn try_from(rays: Vec<LatticePoint>) -> Result<Self> {
        CompleteFan::new(rays)
    }
}

impl From<CompleteFan> for Vec<LatticePoint> {
    fn from(f: CompleteFan) -> Self {
        f.rays
    }
}

impl fmt::Display for CompleteFan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays: Vec<String> = self.rays.iter().map(|r| r.to_string()).collect();
        write!(f, "fan[{}]", rays.join(", "))
    }
}

/// The face fan of `Q`: rays through the vertices in stored order.
pub fn fan_from_polygon(q: &LatticePolygon) -> Result<CompleteFan> {
    if !q.contains_origin_strictly() {
        return Err(Error::InvalidFan(format!("origin is not interior to {q}; the fan is not complete")));
    }
    CompleteFan::new(q.vertices().to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalCurve {
    pub ray: LatticePoint,
    /// Index of the cone of the original fan that the ray subdivides.
    pub cone: usize,
    pub self_intersection: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Desingularization {
    pub fan: CompleteFan,
    pub exceptional: Vec<ExceptionalCurve>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanAnalysis {
    pub cones: Vec<ConeData>,
    /// Indices of the non-basic cones.
    pub singular: Vec<usize>,
    pub basic: Vec<usize>,
    /// `-r_i` is the self-intersection of the strict transform of the i-th curve.
    pub r: Vec<i64>,
    pub picard: i64,
    pub k2: Rational,
    pub desing: Desingularization,
}

pub fn analyze_fan(f: &CompleteFan) -> Result<FanAnalysis> {
    let cones = cone_data(f)?;
    let (singular, basic): (Vec<usize>, Vec<usize>) = (0..f.len()).partition(|&i| !cones[i].is_basic());
    Ok(FanAnalysis {
        r: r_from(f, &cones)?,
        k2: k2_from(f, &cones)?,
        desing: desing_from(f, &cones)?,
        picard: f.picard(),
        singular,
        basic,
        cones,
    })
}

pub fn cone_data(f: &CompleteFan) -> Result<Vec<ConeData>> {
    (0..f.len()).map(|i| cone_invariants(&f.cone(i)?)).collect()
}

/// Solves `r_i n_i = u + u'` where `u`, `u'` are the rays adjacent to `n_i` in the
/// minimal desingularization.
pub fn r_weights(f: &CompleteFan) -> Result<Vec<i64>> {
    r_from(f, &cone_data(f)?)
}

fn r_from(f: &CompleteFan, cones: &[ConeData]) -> Result<Vec<i64>> {
    let nu = f.len();
    (0..nu)
        .map(|i| {
            let before = &cones[(i + nu - 1) % nu].u_chain;
            let left = before[before.len() - 2];
            let right = cones[i].u_chain[1];
            solve_multiple(f.rays()[i], left + right)
        })
        .collect()
}

/// The integer `r` with `r n = s`.
fn solve_multiple(n: LatticePoint, s: LatticePoint) -> Result<i64> {
    let (num, den) = if n.x != 0 { (s.x, n.x) } else { (s.y, n.y) };
    if num % den != 0 {
        return Err(Error::internal(format!("{s} is not an integral multiple of {n}")));
    }
    let r = num / den;
    if n.scale(r)? != s {
        return Err(Error::internal(format!("{s} is not a multiple of {n}")));
    }
    Ok(r)
}

/// `K² = 12 - ν + Σ_{i∈I} ((q-p+1)/q + (q-p̂+1)/q - 2 + Σ_j (b_j - 3))`.
pub fn canonical_k2(f: &CompleteFan) -> Result<Rational> {
    k2_from(f, &cone_data(f)?)
}

fn k2_from(f: &CompleteFan, cones: &[ConeData]) -> Result<Rational> {
    let mut k2 = Rational::from_int(12 - f.len() as i64);
    for c in cones.iter().filter(|c| !c.is_basic()) {
        let fractional = Rational::new(2 * (c.q + 1) - c.p - c.socius, c.q)?;
        let digits: i64 = c.hj.iter().map(|b| b - 3).sum();
        k2 = k2.checked_add(fractional)?.checked_add(Rational::from_int(digits - 2))?;
    }
    Ok(k2)
}

pub fn minimal_desingularization(f: &CompleteFan) -> Result<Desingularization> {
    desing_from(f, &cone_data(f)?)
}

fn desing_from(f: &CompleteFan, cones: &[ConeData]) -> Result<Desingularization> {
    let mut rays = Vec::new();
    let mut exceptional = Vec::new();
    for (i, c) in cones.iter().enumerate() {
        rays.push(f.rays()[i]);
        for (j, &b) in c.hj.iter().enumerate() {
            let ray = c.u_chain[j + 1];
            rays.push(ray);
            exceptional.push(ExceptionalCurve { ray, cone: i, self_intersection: -b });
        }
    }
    Ok(Desingularization { fan: CompleteFan::new(rays)?, exceptional })
}

/// Inserts `ray` into the cone containing it in its interior.
pub fn star_subdivide(f: &CompleteFan, ray: LatticePoint) -> Result<CompleteFan> {
    if ray.is_zero() || !is_primitive(ray)? {
        return Err(Error::domain(format!("subdivision ray {ray} is not primitive")));
    }
    let nu = f.len();
    let i = (0..nu)
        .find(|&i| f.rays[i].det(ray) > 0 && ray.det(f.rays[(i + 1) % nu]) > 0)
        .ok_or_else(|| Error::domain(format!("{ray} is not interior to any cone of {f}")))?;
    let mut rays = f.rays.clone();
    rays.insert(i + 1, ray);
    CompleteFan::new(rays)
}

/// Rays `(1,-1), (1,0), (p,1), (-1,0)`; the toric surface is a Hirzebruch surface.
pub fn hirzebruch_fan(p: i64) -> Result<CompleteFan> {
    if p < 0 {
        return Err(Error::domain(format!("hirzebruch_fan needs p >= 0, got {p}")));
    }
    CompleteFan::new(vec![
        LatticePoint::new(1, -1),
        LatticePoint::new(1, 0),
        LatticePoint::new(p, 1),
        LatticePoint::new(-1, 0),
    ])
}
