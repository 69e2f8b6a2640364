//! LDP-polygons: recognition, the index and the polar polygon, the canonical
//! one-singularity families `Q_p^[k]`, their classifier and an exhaustive search
//! used as a completeness oracle.

mod classify;
mod enumerate;

pub use classify::{classify_one_singularity, Classification, Target};
pub use enumerate::{enumerate_one_singularity, ClassRecord, Enumeration, Failure, SearchOrder};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fans::{analyze_fan, fan_from_polygon, CompleteFan, FanAnalysis};
use crate::lattice::{is_primitive, LatticePoint, LatticePolygon, Rational, RationalPoint, RationalPolygon};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LdpData {
    pub polygon: LatticePolygon,
    pub fan: CompleteFan,
    pub analysis: FanAnalysis,
    /// `l_F` for the facet from vertex `i` to vertex `i+1`.
    pub local_indices: Vec<i64>,
    pub index: i64,
    pub polar: RationalPolygon,
    pub singular_count: usize,
}

/// Origin strictly inside and all vertices primitive.
pub fn is_ldp(q: &LatticePolygon) -> Result<bool> {
    if !q.contains_origin_strictly() {
        return Ok(false);
    }
    for &v in q.vertices() {
        if !is_primitive(v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ldp_analyze(q: &LatticePolygon) -> Result<LdpData> {
    if !is_ldp(q)? {
        return Err(Error::NotLdp(format!("{q} is not an LDP-polygon")));
    }
    let fan = fan_from_polygon(q)?;
    let analysis = analyze_fan(&fan)?;
    let local_indices: Vec<i64> = analysis.cones.iter().map(|c| c.local_index).collect();

    let mut polar = Vec::with_capacity(q.len());
    for (i, (a, b)) in q.edges().enumerate() {
        let e = b - a;
        let g = e.x.gcd(&e.y);
        let eta = LatticePoint::new(e.y / g, -e.x / g);
        let height = eta.dot(a);
        if height != local_indices[i] || eta.dot(b) != height {
            return Err(Error::internal(format!(
                "facet {a}..{b}: height {height} differs from local index {}",
                local_indices[i]
            )));
        }
        polar.push(RationalPoint::new(Rational::new(-eta.x, height)?, Rational::new(-eta.y, height)?));
    }

    let index = local_indices.iter().try_fold(1i64, |acc, &l| checked_lcm(acc, l))?;
    let integral_scale = polar.iter().try_fold(1i64, |acc, v| checked_lcm(checked_lcm(acc, v.x.denom())?, v.y.denom()))?;
    if index != integral_scale {
        return Err(Error::internal(format!("index {index} from local indices, {integral_scale} from the polar vertices")));
    }
    Ok(LdpData {
        polygon: q.clone(),
        singular_count: analysis.singular.len(),
        polar: RationalPolygon::new(polar)?,
        fan,
        analysis,
        local_indices,
        index,
    })
}

fn checked_lcm(a: i64, b: i64) -> Result<i64> {
    (a / a.gcd(&b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

/// `Q_p^[1] = conv{(1,-1), (p,1), (-1,0)}`; `k = 2` adds `(p-1,1)` and `k = 3` adds
/// `(p-1,1)` and `(0,-1)`.
pub fn canonical_polygon(k: i64, p: i64) -> Result<LatticePolygon> {
    if p < 1 {
        return Err(Error::domain(format!("p must be positive, got {p}")));
    }
    let pt = LatticePoint::new;
    let mut v = vec![pt(1, -1), pt(p, 1), pt(-1, 0)];
    match k {
        1 => {}
        2 => v.push(pt(p - 1, 1)),
        3 => v.extend([pt(p - 1, 1), pt(0, -1)]),
        _ => return Err(Error::domain(format!("k must be 1, 2 or 3, got {k}"))),
    }
    LatticePolygon::new(v)
}

/// `Q̌_p^[2] = conv{(1,-1), (p,1), (-1,0), (0,-1)}`, lattice-equivalent to `Q_p^[2]`.
pub fn check_polygon(p: i64) -> Result<LatticePolygon> {
    if p < 1 {
        return Err(Error::domain(format!("p must be positive, got {p}")));
    }
    LatticePolygon::new([(1, -1), (p, 1), (-1, 0), (0, -1)].map(LatticePoint::from))
}

/// Index of `Q_p^[k]`, independent of `k`.
pub fn canonical_index(p: i64) -> i64 {
    if p % 2 == 1 {
        (p + 1) / 2
    } else {
        p + 1
    }
}

/// All `(k, p)` whose surface has index `ℓ`.
pub fn index_parity_check(l: i64) -> Result<Vec<(i64, i64)>> {
    if l < 1 {
        return Err(Error::domain(format!("index must be positive, got {l}")));
    }
    let ps = if l == 1 || l % 2 == 0 { vec![2 * l - 1] } else { vec![l - 1, 2 * l - 1] };
    Ok((1..=3).flat_map(|k| ps.iter().map(move |&p| (k, p))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn recognition() {
        for k in 1..=3 {
            for p in 1..=20 {
                assert!(is_ldp(&canonical_polygon(k, p).unwrap()).unwrap());
            }
        }
        let sq = LatticePolygon::new([pt(1, 1), pt(-1, 1), pt(-1, -1), pt(1, -1)]).unwrap();
        assert!(is_ldp(&sq).unwrap());
        let fat = LatticePolygon::new([pt(2, 0), pt(0, 1), pt(-1, -1)]).unwrap();
        assert!(!is_ldp(&fat).unwrap());
        assert!(matches!(ldp_analyze(&fat), Err(Error::NotLdp(_))));
        assert!(canonical_polygon(4, 1).is_err() && canonical_polygon(1, 0).is_err());
    }

    #[test]
    fn canonical_vertex_lists() {
        let q = canonical_polygon(3, 4).unwrap();
        let expect = LatticePolygon::new([pt(1, -1), pt(4, 1), pt(3, 1), pt(-1, 0), pt(0, -1)]).unwrap();
        assert_eq!(q, expect);
        let c = check_polygon(1).unwrap();
        assert_eq!(c.vertices(), &[pt(-1, 0), pt(0, -1), pt(1, -1), pt(1, 1)]);
    }

    #[test]
    fn index_law() {
        for k in 1..=3 {
            for p in 1..=50 {
                let d = ldp_analyze(&canonical_polygon(k, p).unwrap()).unwrap();
                assert_eq!(d.index, canonical_index(p), "k={k} p={p}");
                assert_eq!(d.singular_count, 1);
            }
        }
    }

    #[test]
    fn polar_of_first_family() {
        for p in 1..=20 {
            let d = ldp_analyze(&canonical_polygon(1, p).unwrap()).unwrap();
            let r = |n, m| Rational::new(n, m).unwrap();
            let mut got: Vec<RationalPoint> = d.polar.vertices().to_vec();
            let mut want = vec![
                RationalPoint::new(r(-2, p + 1), r(p - 1, p + 1)),
                RationalPoint::new(r(1, 1), r(-(p + 1), 1)),
                RationalPoint::new(r(1, 1), r(2, 1)),
            ];
            got.sort();
            want.sort();
            assert_eq!(got, want, "p={p}");
        }
    }

    #[test]
    fn square_has_four_singular_cones() {
        let sq = LatticePolygon::new([pt(1, 1), pt(-1, 1), pt(-1, -1), pt(1, -1)]).unwrap();
        let d = ldp_analyze(&sq).unwrap();
        assert_eq!(d.singular_count, 4);
        assert_eq!(d.index, 1);
    }

    #[test]
    fn index_parity() {
        let ps = |l| {
            let mut v: Vec<i64> = index_parity_check(l).unwrap().into_iter().map(|(_, p)| p).collect();
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(ps(1), vec![1]);
        assert_eq!(ps(3), vec![2, 5]);
        assert_eq!(ps(4), vec![7]);
        assert_eq!(index_parity_check(2).unwrap().len(), 3);
        for p in 1..=60 {
            assert!(ps(canonical_index(p)).contains(&p));
        }
        assert!(index_parity_check(0).is_err());
    }
}
