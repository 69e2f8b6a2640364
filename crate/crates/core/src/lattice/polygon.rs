use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::count::{Constraints, HalfPlane};
use super::{LatticePoint, Rational, RationalPoint, UnimodularMap};
use crate::error::{narrow, Error, Result};

/// A strictly convex lattice polygon.
///
/// Vertices are stored anticlockwise starting from the lexicographically smallest
/// one, so two polygons are equal iff their vertex lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<LatticePoint>", into = "Vec<LatticePoint>")]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl LatticePolygon {
    /// Builds a polygon whose vertex set is exactly `points`, in any order.
    ///
    /// Duplicates, collinear "vertices" and points inside the hull are rejected.
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let points: Vec<LatticePoint> = points.into_iter().collect();
        if points.len() < 3 {
            return Err(Error::InvalidPolygon(format!("need at least 3 vertices, got {}", points.len())));
        }
        for p in &points {
            p.check_limit()?;
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPolygon(format!("duplicate vertex {}", w[0])));
        }
        let hull = monotone_chain(sorted);
        if hull.len() < 3 {
            return Err(Error::InvalidPolygon("vertices are collinear".into()));
        }
        if hull.len() != points.len() {
            let stray = points.iter().find(|p| !hull.contains(p)).expect("hull is a subset");
            return Err(Error::InvalidPolygon(format!(
                "{stray} is not a vertex of the convex hull (collinear with or inside the others)"
            )));
        }
        Ok(LatticePolygon { vertices: hull })
    }

    /// Convex hull of an arbitrary point cloud; interior and collinear points are dropped.
    pub fn convex_hull(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let mut pts: Vec<LatticePoint> = points.into_iter().collect();
        for p in &pts {
            p.check_limit()?;
        }
        pts.sort_unstable();
        pts.dedup();
        let hull = monotone_chain(pts);
        if hull.len() < 3 {
            return Err(Error::InvalidPolygon("point set has empty interior".into()));
        }
        Ok(LatticePolygon { vertices: hull })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Facets as anticlockwise vertex pairs `(v_i, v_{i+1})`, wrapping around.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the Euclidean area.
    pub fn area2(&self) -> i64 {
        let s: i128 = self.edges().map(|(a, b)| a.det(b) as i128).sum();
        // |coords| <= COORD_LIMIT bounds twice the area by 2^61.
        narrow(s, "polygon area").expect("area of a bounded polygon fits in i64")
    }

    pub fn contains_origin_strictly(&self) -> bool {
        self.edges().all(|(a, b)| a.det(b) > 0)
    }

    /// Boundary lattice-point count as the sum of edge gcds.
    pub fn boundary_count_by_gcd(&self) -> i64 {
        self.edges().map(|(a, b)| (b.x - a.x).gcd(&(b.y - a.y))).sum()
    }

    pub fn apply_map(&self, m: &UnimodularMap) -> Result<Self> {
        let image = self.vertices.iter().map(|&v| m.apply(v)).collect::<Result<Vec<_>>>()?;
        LatticePolygon::new(image)
    }

    pub fn dilate(&self, k: i64) -> Result<Self> {
        if k <= 0 {
            return Err(Error::domain("dilation factor must be positive"));
        }
        let image = self.vertices.iter().map(|v| v.scale(k)?.check_limit()).collect::<Result<Vec<_>>>()?;
        Ok(LatticePolygon { vertices: image })
    }

    pub fn to_rational(&self) -> RationalPolygon {
        RationalPolygon { vertices: self.vertices.iter().map(|v| v.to_rational()).collect() }
    }

    /// Re-canonicalizes; a no-op on any value that went through a constructor.
    pub fn canonicalize(&self) -> Self {
        LatticePolygon::new(self.vertices.clone()).expect("stored polygon is valid")
    }
}

impl TryFrom<Vec<LatticePoint>> for LatticePolygon {
    type Error = Error;
    fn try_from(v: Vec<LatticePoint>) -> Result<Self> {
        LatticePolygon::new(v)
    }
}

impl From<LatticePolygon> for Vec<LatticePoint> {
    fn from(p: LatticePolygon) -> Self {
        p.vertices
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i128 {
    let (ax, ay) = ((a.x - o.x) as i128, (a.y - o.y) as i128);
    let (bx, by) = ((b.x - o.x) as i128, (b.y - o.y) as i128);
    ax * by - ay * bx
}

/// Andrew's monotone chain on sorted, deduplicated input. Output is strictly
/// convex, anticlockwise, and starts at the lexicographic minimum.
fn monotone_chain(pts: Vec<LatticePoint>) -> Vec<LatticePoint> {
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// A strictly convex polygon with rational vertices, in the same canonical
/// storage form as [`LatticePolygon`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<RationalPoint>", into = "Vec<RationalPoint>")]
pub struct RationalPolygon {
    vertices: Vec<RationalPoint>,
}

impl RationalPolygon {
    /// `vertices` must be given in cyclic order (either orientation).
    pub fn new(mut vertices: Vec<RationalPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!("need at least 3 vertices, got {n}")));
        }
        let mut area2 = Rational::ZERO;
        for i in 0..n {
            area2 = area2.checked_add(vertices[i].det(vertices[(i + 1) % n])?)?;
        }
        if area2 == Rational::ZERO {
            return Err(Error::InvalidPolygon("degenerate rational polygon".into()));
        }
        if area2 < Rational::ZERO {
            vertices.reverse();
        }
        for i in 0..n {
            let (a, b, c) = (vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if b.checked_sub(a)?.det(c.checked_sub(b)?)? <= Rational::ZERO {
                return Err(Error::InvalidPolygon(format!("vertex {b} is not a strictly convex corner")));
            }
        }
        let start = (0..n).min_by_key(|&i| vertices[i]).expect("nonempty");
        vertices.rotate_left(start);
        Ok(RationalPolygon { vertices })
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (RationalPoint, RationalPoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn area2(&self) -> Result<Rational> {
        self.edges().try_fold(Rational::ZERO, |acc, (a, b)| acc.checked_add(a.det(b)?))
    }

    pub fn dilate(&self, k: i64) -> Result<Self> {
        if k <= 0 {
            return Err(Error::domain("dilation factor must be positive"));
        }
        let vertices = self.vertices.iter().map(|v| v.scale(k)).collect::<Result<Vec<_>>>()?;
        Ok(RationalPolygon { vertices })
    }

    /// `Some` iff every vertex is a lattice point.
    pub fn to_lattice(&self) -> Option<LatticePolygon> {
        let vs: Option<Vec<_>> = self.vertices.iter().map(|v| v.to_lattice()).collect();
        LatticePolygon::new(vs?).ok()
    }

    pub fn contains_origin_strictly(&self) -> Result<bool> {
        for (a, b) in self.edges() {
            if a.det(b)? <= Rational::ZERO {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl TryFrom<Vec<RationalPoint>> for RationalPolygon {
    type Error = Error;
    fn try_from(v: Vec<RationalPoint>) -> Result<Self> {
        RationalPolygon::new(v)
    }
}

impl From<RationalPolygon> for Vec<RationalPoint> {
    fn from(p: RationalPolygon) -> Self {
        p.vertices
    }
}

/// Shared surface of the two polygon kinds: exact area and half-plane description.
pub trait Polygon {
    fn area2_exact(&self) -> Result<Rational>;
    fn constraints(&self) -> Result<Constraints>;
}

impl Polygon for LatticePolygon {
    fn area2_exact(&self) -> Result<Rational> {
        Ok(Rational::from_int(self.area2()))
    }

    fn constraints(&self) -> Result<Constraints> {
        let planes = self
            .edges()
            .map(|(u, w)| {
                let (a, b) = (-(w.y - u.y) as i128, (w.x - u.x) as i128);
                HalfPlane { a, b, c: a * u.x as i128 + b * u.y as i128 }
            })
            .collect();
        let xmin = self.vertices.iter().map(|v| v.x).min().expect("nonempty");
        let xmax = self.vertices.iter().map(|v| v.x).max().expect("nonempty");
        Ok(Constraints::new(planes, xmin as i128, xmax as i128))
    }
}

impl Polygon for RationalPolygon {
    fn area2_exact(&self) -> Result<Rational> {
        self.area2()
    }

    fn constraints(&self) -> Result<Constraints> {
        let mut planes = Vec::with_capacity(self.len());
        for (u, w) in self.edges() {
            let a = -w.y.checked_sub(u.y)?;
            let b = w.x.checked_sub(u.x)?;
            let c = a.checked_mul(u.x)?.checked_add(b.checked_mul(u.y)?)?;
            let l = [a, b, c].iter().fold(1i128, |l, r| l.lcm(&(r.denom() as i128)));
            let lift = |r: Rational| r.numer() as i128 * (l / r.denom() as i128);
            planes.push(HalfPlane { a: lift(a), b: lift(b), c: lift(c) });
        }
        let xmin = self.vertices.iter().map(|v| v.x).min().expect("nonempty");
        let xmax = self.vertices.iter().map(|v| v.x).max().expect("nonempty");
        Ok(Constraints::new(planes, xmin.ceil() as i128, xmax.floor() as i128))
    }
}
