//! Exact plane geometry over the integers: points, lattice automorphisms,
//! convex polygons and lattice-point enumeration. No floating point anywhere.

mod count;
pub mod io;
mod map;
mod point;
mod polygon;
mod rational;

pub use count::{Constraints, HalfPlane, LatticeCounts, LatticePoints};
pub use map::UnimodularMap;
pub use point::{extended_gcd, is_primitive, LatticePoint, RationalPoint, COORD_LIMIT};
pub use polygon::{LatticePolygon, Polygon, RationalPolygon};
pub use rational::Rational;

use crate::error::Result;

pub fn apply_map(m: &UnimodularMap, polygon: &LatticePolygon) -> Result<LatticePolygon> {
    polygon.apply_map(m)
}

/// Twice the area, exactly.
pub fn polygon_area2<P: Polygon>(polygon: &P) -> Result<Rational> {
    polygon.area2_exact()
}

pub fn lattice_points<P: Polygon>(polygon: &P) -> Result<LatticePoints> {
    polygon.constraints()?.points()
}

pub fn lattice_counts<P: Polygon>(polygon: &P) -> Result<LatticeCounts> {
    polygon.constraints()?.counts()
}

/// Lattice-point counts of the dilation `k * P`.
pub fn dilated_counts<P: Polygon>(polygon: &P, k: i64) -> Result<LatticeCounts> {
    polygon.constraints()?.dilate(k).counts()
}

/// `#(2P ∩ Z²)`, by direct enumeration of the doubled polygon.
pub fn minkowski_double<P: Polygon>(polygon: &P) -> Result<i64> {
    Ok(dilated_counts(polygon, 2)?.total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn q(k: usize, p: i64) -> LatticePolygon {
        let all = [pt(1, -1), pt(p, 1), pt(p - 1, 1), pt(-1, 0), pt(0, -1)];
        let pick: &[usize] = match k {
            1 => &[0, 1, 3],
            2 => &[0, 1, 2, 3],
            _ => &[0, 1, 2, 3, 4],
        };
        LatticePolygon::new(pick.iter().map(|&i| all[i])).unwrap()
    }

    #[test]
    fn unit_triangle_points() {
        let t = LatticePolygon::new([pt(0, 0), pt(1, 0), pt(0, 1)]).unwrap();
        let pts = lattice_points(&t).unwrap();
        assert_eq!(pts.boundary.len(), 3);
        assert!(pts.interior.is_empty());
    }

    #[test]
    fn unit_square_doubled() {
        let s = LatticePolygon::new([pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]).unwrap();
        assert_eq!(minkowski_double(&s).unwrap(), 9);
    }

    #[test]
    fn canonical_family_areas_and_interiors() {
        for k in 1..=3 {
            for p in 1..=30 {
                let poly = q(k, p);
                assert_eq!(poly.area2(), p + k as i64 + 2);
                let c = lattice_counts(&poly).unwrap();
                let expected_interior = if p % 2 == 0 { p / 2 + 1 } else { (p - 1) / 2 + 1 };
                assert_eq!(c.interior, expected_interior, "k={k} p={p}");
                let expected_boundary = k as i64 + 2 + (p % 2);
                assert_eq!(c.boundary, expected_boundary);
            }
        }
    }

    #[test]
    fn rational_polygon_points_match_integral_dilation() {
        let r = |n, d| Rational::new(n, d).unwrap();
        let half = RationalPolygon::new(vec![
            RationalPoint::new(r(-1, 2), r(-1, 2)),
            RationalPoint::new(r(3, 2), r(-1, 2)),
            RationalPoint::new(r(-1, 2), r(3, 2)),
        ])
        .unwrap();
        let c = lattice_counts(&half).unwrap();
        // (1,0) and (0,1) sit on the hypotenuse x + y = 1.
        assert_eq!((c.total, c.boundary, c.interior), (3, 2, 1));
        let doubled = half.dilate(2).unwrap().to_lattice().unwrap();
        assert_eq!(dilated_counts(&half, 2).unwrap(), lattice_counts(&doubled).unwrap());
    }

    #[test]
    fn boundary_by_gcd_agrees_with_scan() {
        for k in 1..=3 {
            for p in 1..=12 {
                let poly = q(k, p).dilate(3).unwrap();
                assert_eq!(poly.boundary_count_by_gcd(), lattice_counts(&poly).unwrap().boundary);
            }
        }
    }
}
