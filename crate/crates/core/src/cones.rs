//! Invariants of two-dimensional rational strongly convex cones.
//!
//! Every such cone is lattice-equivalent to `cone((1,0), (p,q))` with
//! `0 <= p < q` and `gcd(p,q) = 1`; this module computes `(p, q)` together with an
//! explicit normalizing map, the socius, the local index of the anticanonical
//! divisor, and the Hirzebruch-Jung data of the minimal resolution.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{extended_gcd, is_primitive, lattice_counts, LatticePoint, LatticePolygon, UnimodularMap};

/// `cone(n, n2)` with primitive generators and `det(n, n2) > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cone2 {
    n: LatticePoint,
    n2: LatticePoint,
}

impl Cone2 {
    pub fn new(n: LatticePoint, n2: LatticePoint) -> Result<Self> {
        for g in [n, n2] {
            g.check_limit()?;
            if !is_primitive(g)? {
                return Err(Error::domain(format!("cone generator {g} is not primitive")));
            }
        }
        if n.det(n2) <= 0 {
            return Err(Error::domain(format!("det({n}, {n2}) <= 0: not an anticlockwise strongly convex cone")));
        }
        Ok(Cone2 { n, n2 })
    }

    pub fn first(&self) -> LatticePoint {
        self.n
    }

    pub fn second(&self) -> LatticePoint {
        self.n2
    }

    /// `q`, the normalized lattice volume of the cone.
    pub fn det(&self) -> i64 {
        self.n.det(self.n2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeData {
    pub p: i64,
    pub q: i64,
    pub socius: i64,
    /// det +1; sends the first generator to (1,0) and the second to (p,q).
    pub normalizer: UnimodularMap,
    pub local_index: i64,
    pub hj: Vec<i64>,
    /// `u_0 = n, u_1, ..., u_{s+1} = n2`; just `[n, n2]` for a basic cone.
    pub u_chain: Vec<LatticePoint>,
    /// `1/q(q-p,1)`, or empty for a basic cone.
    pub singularity: String,
}

impl ConeData {
    pub fn is_basic(&self) -> bool {
        self.q == 1
    }
}

pub fn cone_invariants(c: &Cone2) -> Result<ConeData> {
    let (n, n2) = (c.n, c.n2);
    let (g, kappa, lambda) = extended_gcd(n.x, n.y)?;
    debug_assert_eq!(g, 1);
    let q = c.det();
    let x0 = kappa * n2.x - lambda * n2.y;
    let p = x0.rem_euclid(q);
    let t = (p - x0) / q;
    let normalizer = UnimodularMap::new([[kappa - t * n.y, -lambda + t * n.x], [-n.y, n.x]])?;
    if normalizer.apply(n)? != LatticePoint::new(1, 0) || normalizer.apply(n2)? != LatticePoint::new(p, q) {
        return Err(Error::internal(format!("normalizer {normalizer} does not normalize cone({n}, {n2})")));
    }
    let socius = socius(p, q)?;
    let (hj, singularity) = if q == 1 {
        (Vec::new(), String::new())
    } else {
        (hj_expansion(p, q)?, format!("1/{q}({},1)", q - p))
    };
    let u_chain = chain_from(n, n2, p, q, &hj)?;
    Ok(ConeData { p, q, socius, normalizer, local_index: q / q.gcd(&(p - 1)), hj, u_chain, singularity })
}

pub fn is_basic(c: &Cone2) -> bool {
    c.det() == 1
}

/// Basicness via the empty-triangle criterion: `conv{0, n, n2}` has no lattice
/// points besides its vertices.
pub fn is_basic_by_triangle(c: &Cone2) -> Result<bool> {
    let t = LatticePolygon::new([LatticePoint::ORIGIN, c.n, c.n2])?;
    Ok(lattice_counts(&t)?.total == 3)
}

/// The unique `0 <= p̂ < q` with `p * p̂ ≡ 1 (mod q)`; zero when `q = 1`.
pub fn socius(p: i64, q: i64) -> Result<i64> {
    check_pq(p, q)?;
    if q == 1 {
        return Ok(0);
    }
    let (_, kappa, _) = extended_gcd(p, q)?;
    Ok(kappa.rem_euclid(q))
}

/// Negative-regular continued fraction `q/(q-p) = b_1 - 1/(b_2 - ...)`, all `b_j >= 2`.
pub fn hj_expansion(p: i64, q: i64) -> Result<Vec<i64>> {
    check_pq(p, q)?;
    if q < 2 {
        return Err(Error::domain("a basic cone has no Hirzebruch-Jung expansion"));
    }
    let (mut num, mut den) = (q, q - p);
    let mut digits = Vec::new();
    while den != 0 {
        let b = Integer::div_ceil(&num, &den);
        digits.push(b);
        (num, den) = (den, b * den - num);
        if digits.len() as i64 > q {
            return Err(Error::internal(format!("continued fraction of {q}/{} does not terminate", q - p)));
        }
    }
    Ok(digits)
}

pub fn u_chain(c: &Cone2) -> Result<Vec<LatticePoint>> {
    Ok(cone_invariants(c)?.u_chain)
}

fn chain_from(n: LatticePoint, n2: LatticePoint, p: i64, q: i64, hj: &[i64]) -> Result<Vec<LatticePoint>> {
    if q == 1 {
        return Ok(vec![n, n2]);
    }
    let raw = n.scale(q - p)? + n2;
    if raw.x % q != 0 || raw.y % q != 0 {
        return Err(Error::internal(format!("first resolution ray {raw}/{q} is not integral")));
    }
    let mut chain = vec![n, LatticePoint::new(raw.x / q, raw.y / q)];
    for &b in hj {
        let (prev, cur) = (chain[chain.len() - 2], chain[chain.len() - 1]);
        chain.push(cur.scale(b)? - prev);
    }
    if chain.pop() != Some(n2) || chain.len() != hj.len() + 1 {
        return Err(Error::internal(format!("resolution chain of cone({n}, {n2}) does not end at {n2}")));
    }
    chain.push(n2);
    Ok(chain)
}

fn check_pq(p: i64, q: i64) -> Result<()> {
    if q < 1 || p < 0 || p >= q {
        return Err(Error::domain(format!("need 0 <= p < q, got p={p}, q={q}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::domain(format!("gcd({p}, {q}) != 1")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn cone(a: (i64, i64), b: (i64, i64)) -> Cone2 {
        Cone2::new(a.into(), b.into()).unwrap()
    }

    #[test]
    fn standard_basic_cone() {
        let d = cone_invariants(&cone((1, 0), (0, 1))).unwrap();
        assert_eq!((d.p, d.q, d.socius, d.local_index), (0, 1, 0, 1));
        assert!(d.hj.is_empty() && d.singularity.is_empty());
        assert_eq!(d.u_chain, vec![pt(1, 0), pt(0, 1)]);
    }

    #[test]
    fn canonical_singular_cone() {
        for p in 1..40 {
            let c = cone((1, -1), (p, 1));
            let d = cone_invariants(&c).unwrap();
            assert_eq!((d.p, d.q, d.socius), (p, p + 1, p));
            assert_eq!(d.hj, vec![p + 1]);
            assert_eq!(d.u_chain, vec![pt(1, -1), pt(1, 0), pt(p, 1)]);
            assert_eq!(d.singularity, format!("1/{}(1,1)", p + 1));
            assert!(!is_basic(&c));
        }
    }

    #[test]
    fn two_five_cone() {
        let d = cone_invariants(&cone((1, 0), (2, 5))).unwrap();
        assert_eq!((d.p, d.q, d.socius), (2, 5, 3));
        assert_eq!(d.hj, vec![2, 3]);
        assert_eq!(d.u_chain.len(), 4);
        assert!(d.u_chain.windows(2).all(|w| w[0].det(w[1]) == 1));
        assert_eq!(d.local_index, 5);
    }

    #[test]
    fn rejects_bad_cones() {
        assert!(Cone2::new(pt(2, 0), pt(0, 1)).is_err());
        assert!(Cone2::new(pt(0, 1), pt(1, 0)).is_err());
        assert!(Cone2::new(pt(1, 0), pt(-1, 0)).is_err());
    }

    #[test]
    fn socius_examples() {
        assert_eq!(socius(0, 1).unwrap(), 0);
        assert_eq!(socius(3, 7).unwrap(), 5);
        for p in 1..50 {
            assert_eq!(socius(p, p + 1).unwrap(), p);
        }
        assert!(socius(2, 4).is_err());
    }

    #[test]
    fn socius_by_brute_force() {
        for q in 2..60i64 {
            for p in (1..q).filter(|p| p.gcd(&q) == 1) {
                let brute = (0..q).find(|s| (p * s) % q == 1).unwrap();
                assert_eq!(socius(p, q).unwrap(), brute);
            }
        }
    }

    #[test]
    fn hj_examples() {
        assert_eq!(hj_expansion(1, 2).unwrap(), vec![2]);
        assert_eq!(hj_expansion(2, 5).unwrap(), vec![2, 3]);
        assert_eq!(hj_expansion(7, 8).unwrap(), vec![8]);
        assert!(hj_expansion(0, 1).is_err());
    }

    #[test]
    fn small_chain() {
        assert_eq!(u_chain(&cone((1, 0), (1, 2))).unwrap(), vec![pt(1, 0), pt(1, 1), pt(1, 2)]);
    }

    /// Folds b_1 - 1/(b_2 - ...) back into a reduced fraction.
    fn evaluate(digits: &[i64]) -> (i64, i64) {
        let (mut num, mut den) = (1i64, 0i64);
        for &b in digits.iter().rev() {
            (num, den) = (b * num - den, num);
        }
        (num, den)
    }

    #[test]
    fn hj_evaluates_back() {
        for q in 2..80i64 {
            for p in (0..q).filter(|p| p.gcd(&q) == 1) {
                let digits = hj_expansion(p, q).unwrap();
                assert!(digits.iter().all(|&b| b >= 2));
                assert!((digits.len() as i64) < q);
                assert_eq!(evaluate(&digits), (q, q - p), "p={p} q={q}");
            }
        }
    }

    fn primitive() -> impl Strategy<Value = LatticePoint> {
        (-25i64..=25, -25i64..=25).prop_filter_map("primitive", |(x, y)| {
            (x.gcd(&y) == 1).then_some(LatticePoint::new(x, y))
        })
    }

    proptest! {
        #[test]
        fn basic_iff_empty_triangle(a in primitive(), b in primitive()) {
            prop_assume!(a.det(b) > 0);
            let c = Cone2::new(a, b).unwrap();
            let d = cone_invariants(&c).unwrap();
            prop_assert_eq!(is_basic(&c), d.q == 1);
            prop_assert_eq!(is_basic(&c), is_basic_by_triangle(&c).unwrap());
        }

        #[test]
        fn chain_is_unimodular(a in primitive(), b in primitive()) {
            prop_assume!(a.det(b) > 0);
            let d = cone_invariants(&Cone2::new(a, b).unwrap()).unwrap();
            prop_assert_eq!(d.u_chain.len(), d.hj.len() + 2);
            prop_assert!(d.u_chain.windows(2).all(|w| w[0].det(w[1]) == 1));
        }

        #[test]
        fn invariants_are_equivariant(a in primitive(), b in primitive(),
                                      s in -6i64..=6, t in -6i64..=6) {
            prop_assume!(a.det(b) > 0);
            let d = cone_invariants(&Cone2::new(a, b).unwrap()).unwrap();
            // det +1: (p, q) is unchanged.
            let m = UnimodularMap::new([[1, s], [0, 1]]).unwrap()
                .compose(&UnimodularMap::new([[1, 0], [t, 1]]).unwrap()).unwrap();
            let (ma, mb) = (m.apply(a).unwrap(), m.apply(b).unwrap());
            let e = cone_invariants(&Cone2::new(ma, mb).unwrap()).unwrap();
            prop_assert_eq!((e.p, e.q), (d.p, d.q));
            // det -1 with the generators swapped: p becomes its socius.
            let r = UnimodularMap::new([[0, 1], [1, 0]]).unwrap().compose(&m).unwrap();
            let (ra, rb) = (r.apply(a).unwrap(), r.apply(b).unwrap());
            let f = cone_invariants(&Cone2::new(rb, ra).unwrap()).unwrap();
            prop_assert_eq!((f.p, f.q), (d.socius, d.q));
        }

        #[test]
        fn socius_is_an_involution(q in 1i64..500, p in 0i64..500) {
            let p = p % q;
            prop_assume!(p.gcd(&q) == 1);
            prop_assert_eq!(socius(socius(p, q).unwrap(), q).unwrap(), p);
        }
    }
}
