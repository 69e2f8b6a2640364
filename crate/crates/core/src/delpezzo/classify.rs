use serde::{Deserialize, Serialize};

use super::{canonical_polygon, check_polygon, is_ldp};
use crate::error::{Error, Result};
use crate::fans::{analyze_fan, fan_from_polygon};
use crate::lattice::{LatticePoint, LatticePolygon, UnimodularMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// The normalized polygon was `Q_p^[k]` itself.
    Canonical,
    /// The normalized polygon was `Q̌_p^[2]`, moved onto `Q_p^[2]` by an extra map.
    Check,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub k: i64,
    pub p: i64,
    /// Maps the input polygon onto `Q_p^[k]`.
    pub transform: UnimodularMap,
    pub target: Target,
    /// 1-based position, counted anticlockwise from the image of the singular
    /// cone's first ray, of the vertex that lands on `(-1,0)`.
    pub mu: usize,
    /// Index of the non-basic cone in the input's stored vertex order.
    pub singular_cone: usize,
}

const PSI2: [[i64; 2]; 2] = [[1, 0], [-1, 1]];

/// Moves the singular cone to `cone((1,-1), (p,1))` and reads off `k = ν - 2` and `p`.
pub fn classify_one_singularity(q: &LatticePolygon) -> Result<Classification> {
    if !is_ldp(q)? {
        return Err(Error::NotLdp(format!("{q} is not an LDP-polygon")));
    }
    let analysis = analyze_fan(&fan_from_polygon(q)?)?;
    let &[i] = analysis.singular.as_slice() else {
        return Err(Error::SingularCount(analysis.singular.len()));
    };
    let cone = &analysis.cones[i];
    let (p, nu) = (cone.p, q.len());
    if cone.q != p + 1 {
        return Err(Error::internal(format!("singular cone is a ({p},{})-cone, expected q = p+1", cone.q)));
    }
    let upsilon = UnimodularMap::new(PSI2)?.compose(&cone.normalizer)?;

    let rotated: Vec<LatticePoint> = (0..nu).map(|j| q.vertices()[(i + j) % nu]).collect();
    let images = rotated.iter().map(|&v| upsilon.apply(v)).collect::<Result<Vec<_>>>()?;
    if images[0] != LatticePoint::new(1, -1) || images[1] != LatticePoint::new(p, 1) {
        return Err(Error::internal(format!("normalized singular cone is not cone((1,-1), ({p},1))")));
    }
    let hits: Vec<usize> = (0..nu).filter(|&j| images[j] == LatticePoint::new(-1, 0)).collect();
    let &[mu] = hits.as_slice() else {
        return Err(Error::internal(format!("{} vertices map to (-1,0)", hits.len())));
    };

    let k = nu as i64 - 2;
    if !(1..=3).contains(&k) {
        return Err(Error::internal(format!("one-singularity polygon with {nu} vertices")));
    }
    let image = q.apply_map(&upsilon)?;
    let canonical = canonical_polygon(k, p)?;
    let (transform, target) = if image == canonical {
        (upsilon, Target::Canonical)
    } else if k == 2 && image == check_polygon(p)? {
        let y = UnimodularMap::new([[1, 1 - p], [0, -1]])?;
        (y.compose(&upsilon)?, Target::Check)
    } else {
        return Err(Error::internal(format!("normalized polygon {image} is neither Q_{p}^[{k}] nor its variant")));
    };
    if q.apply_map(&transform)? != canonical {
        return Err(Error::internal("classifying transform does not reach the canonical polygon".to_string()));
    }
    Ok(Classification { k, p, transform, target, mu: mu + 1, singular_cone: i })
}
