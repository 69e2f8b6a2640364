//! Exhaustive search for one-singularity LDP-polygons with vertices in `[-B, B]²`.
//!
//! Polygons are grown vertex by vertex in angular order from their first vertex,
//! so each one is produced exactly once. Partial chains are cut as soon as a turn
//! fails to be strictly convex, an edge passes on the wrong side of the origin or a
//! second non-basic cone appears.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{canonical_polygon, classify_one_singularity};
use crate::error::{Error, Result};
use crate::fans::{angle_cmp, fan_from_polygon};
use crate::graphs::{canonical_key, graph_of, surfaces_isomorphic, Node};
use crate::lattice::{is_primitive, LatticePoint, LatticePolygon};

/// Two independent traversals; both must find the same classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchOrder {
    /// Angles measured from the positive x-axis, starts visited in increasing order.
    Forward,
    /// Angles measured from the negative x-axis, starts visited in decreasing order.
    Reverse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub k: i64,
    pub p: i64,
    /// Number of polygons found in this class.
    pub count: usize,
    /// The lexicographically least polygon of the class.
    pub representative: LatticePolygon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub polygon: LatticePolygon,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub bound: i64,
    pub polygons: usize,
    /// Sorted by `(k, p)`.
    pub classes: Vec<ClassRecord>,
    pub failures: Vec<Failure>,
}

pub fn enumerate_one_singularity(bound: i64, order: SearchOrder) -> Result<Enumeration> {
    if !(1..=1000).contains(&bound) {
        return Err(Error::domain(format!("bound must lie in 1..=1000, got {bound}")));
    }
    let mut candidates = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            let v = LatticePoint::new(x, y);
            if !v.is_zero() && is_primitive(v)? {
                candidates.push(v);
            }
        }
    }
    match order {
        SearchOrder::Forward => candidates.sort_by(|&a, &b| angle_cmp(a, b)),
        SearchOrder::Reverse => candidates.sort_by(|&a, &b| angle_cmp(-a, -b)),
    }
    let mut starts: Vec<usize> = (0..candidates.len()).collect();
    if order == SearchOrder::Reverse {
        starts.reverse();
    }

    let found: Vec<Vec<LatticePolygon>> = starts
        .par_iter()
        .map(|&s| {
            let mut out = Vec::new();
            let mut chain = vec![s];
            grow(&candidates, &mut chain, 0, &mut out);
            out
        })
        .collect();
    let polygons: Vec<LatticePolygon> = found.into_iter().flatten().collect();

    let checked: Vec<Checked> = polygons.par_iter().map(check_one).collect();

    let mut classes: BTreeMap<(i64, i64, Vec<Node>), ClassRecord> = BTreeMap::new();
    let mut failures = Vec::new();
    for r in checked {
        match r {
            Ok((key, k, p, polygon)) => {
                let rec = classes
                    .entry((k, p, key))
                    .or_insert_with(|| ClassRecord { k, p, count: 0, representative: polygon.clone() });
                rec.count += 1;
                if polygon.vertices() < rec.representative.vertices() {
                    rec.representative = polygon;
                }
            }
            Err(f) => failures.push(f),
        }
    }
    failures.sort_by(|a, b| a.polygon.vertices().cmp(b.polygon.vertices()));
    Ok(Enumeration { bound, polygons: polygons.len(), classes: classes.into_values().collect(), failures })
}

/// Canonical graph key, `k`, `p` and the polygon, or why it failed.
type Checked = std::result::Result<(Vec<Node>, i64, i64, LatticePolygon), Failure>;

fn check_one(q: &LatticePolygon) -> Checked {
    let fail = |reason: String| Failure { polygon: q.clone(), reason };
    let c = classify_one_singularity(q).map_err(|e| fail(e.to_string()))?;
    let run = || -> Result<(Vec<Node>, bool)> {
        let fan = fan_from_polygon(q)?;
        let target = fan_from_polygon(&canonical_polygon(c.k, c.p)?)?;
        Ok((canonical_key(&graph_of(&fan)?)?, surfaces_isomorphic(&fan, &target)?))
    };
    match run() {
        Ok((key, true)) => Ok((key, c.k, c.p, q.clone())),
        Ok((_, false)) => Err(fail(format!("graph differs from that of Q_{}^[{}]", c.p, c.k))),
        Err(e) => Err(fail(e.to_string())),
    }
}

fn turns_left(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> bool {
    (b - a).det(c - b) > 0
}

/// `chain` holds candidate indices in increasing angular order; `singular` counts
/// the non-basic cones between consecutive chain entries.
fn grow(cands: &[LatticePoint], chain: &mut Vec<usize>, singular: usize, out: &mut Vec<LatticePolygon>) {
    let first = cands[chain[0]];
    let last = cands[*chain.last().unwrap()];
    for j in chain.last().unwrap() + 1..cands.len() {
        let v = cands[j];
        let d = last.det(v);
        if d <= 0 {
            continue;
        }
        let singular = singular + usize::from(d > 1);
        if singular > 1 {
            continue;
        }
        if chain.len() >= 2 && !turns_left(cands[chain[chain.len() - 2]], last, v) {
            continue;
        }
        chain.push(j);
        let closing = v.det(first);
        if chain.len() >= 3 && closing > 0 {
            let total = singular + usize::from(closing > 1);
            if total == 1 && turns_left(last, v, first) && turns_left(v, first, cands[chain[1]]) {
                let verts: Vec<LatticePoint> = chain.iter().map(|&i| cands[i]).collect();
                if let Ok(q) = LatticePolygon::new(verts) {
                    out.push(q);
                }
            }
        }
        grow(cands, chain, singular, out);
        chain.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn order_is_strict(cands: &[LatticePoint]) -> bool {
        cands.windows(2).all(|w| angle_cmp(w[0], w[1]) == Ordering::Less)
    }

    #[test]
    fn bound_two_has_the_reflexive_classes() {
        let e = enumerate_one_singularity(2, SearchOrder::Forward).unwrap();
        assert!(e.failures.is_empty(), "{:?}", e.failures);
        for k in 1..=3 {
            assert!(e.classes.iter().any(|c| (c.k, c.p) == (k, 1)), "missing Q_1^[{k}]");
        }
    }

    #[test]
    fn bound_three_classifies_everything() {
        let e = enumerate_one_singularity(3, SearchOrder::Forward).unwrap();
        assert!(e.failures.is_empty(), "{:?}", e.failures);
        assert!(e.classes.iter().all(|c| c.p <= 6));
        // One class per (k, p).
        let mut kp: Vec<(i64, i64)> = e.classes.iter().map(|c| (c.k, c.p)).collect();
        kp.dedup();
        assert_eq!(kp.len(), e.classes.len());
        assert_eq!(e.polygons, e.classes.iter().map(|c| c.count).sum::<usize>());
    }

    #[test]
    fn orders_agree() {
        let a = enumerate_one_singularity(3, SearchOrder::Forward).unwrap();
        let b = enumerate_one_singularity(3, SearchOrder::Reverse).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tiny_bound() {
        let e = enumerate_one_singularity(1, SearchOrder::Forward).unwrap();
        assert!(e.failures.is_empty());
        assert!(enumerate_one_singularity(0, SearchOrder::Forward).is_err());
    }

    #[test]
    fn found_polygons_are_distinct_and_strict() {
        let mut cands: Vec<LatticePoint> =
            (-3..=3).flat_map(|x| (-3..=3).map(move |y| LatticePoint::new(x, y)))
                .filter(|v| !v.is_zero() && is_primitive(*v).unwrap())
                .collect();
        cands.sort_by(|a, b| angle_cmp(*a, *b));
        assert!(order_is_strict(&cands));
    }
}
