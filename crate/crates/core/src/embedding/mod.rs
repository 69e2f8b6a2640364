//! The anticanonical embedding of an LDP surface of index `ℓ`.
//!
//! The lattice points of `ℓQ̊` are the coordinates `z_(i,j)` of the embedding into
//! `ℙ^δ`. Once `∂(ℓQ̊)` has at least four lattice points, the ideal is generated by
//! the quadratic binomials `z_a z_b - z_c z_d` with `a + b = c + d`, and the size
//! `β` of a minimal system is `C(δ+2, 2) - #(2ℓQ̊ ∩ ℤ²)`.

mod binomial;
pub mod elimination;
mod quadrics;

pub use binomial::Binomial;
pub use quadrics::{
    fibers, ideal_file, koelman_count, koelman_quadrics, minimal_system, parse_ideal, span_membership,
    QuadricIdealReport, RankCheck,
};

use serde::{Deserialize, Serialize};

use crate::delpezzo::{canonical_polygon, ldp_analyze, LdpData};
use crate::error::{narrow, Error, Result};
use crate::lattice::{dilated_counts, lattice_points, LatticePoint, LatticePolygon, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingData {
    pub index: i64,
    /// `ℓQ̊`.
    pub polygon: LatticePolygon,
    /// Its lattice points in lexicographic order.
    pub points: Vec<LatticePoint>,
    pub delta: i64,
    /// Projective degree `2·area(ℓQ̊)`.
    pub degree: i64,
    pub boundary: i64,
    pub interior: i64,
}

pub fn embedding_data(l: &LdpData) -> Result<EmbeddingData> {
    let polygon = l
        .polar
        .dilate(l.index)?
        .to_lattice()
        .ok_or_else(|| Error::internal(format!("{}-fold polar polygon is not a lattice polygon", l.index)))?;
    let found = lattice_points(&polygon)?;
    let (boundary, interior) = (found.boundary.len() as i64, found.interior.len() as i64);
    let points = found.all();
    let delta = points.len() as i64 - 1;
    let degree = polygon.area2();
    if 2 * delta != degree + boundary || interior != delta - boundary + 1 {
        return Err(Error::internal(format!("Pick's formula fails on {polygon}")));
    }
    Ok(EmbeddingData { index: l.index, polygon, points, delta, degree, boundary, interior })
}

/// Genus of a general hyperplane section: the interior point count of `ℓQ̊`.
pub fn sectional_genus(e: &EmbeddingData) -> i64 {
    e.interior
}

/// One row of invariants of `Q_p^[k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: i64,
    pub delta: i64,
    pub beta: i64,
    pub g: i64,
    pub boundary: i64,
    pub index: i64,
}

impl TableRow {
    pub const FIELDS: [&'static str; 6] = ["d", "delta", "beta", "g", "boundary", "index"];

    pub fn values(&self) -> [i64; 6] {
        [self.d, self.delta, self.beta, self.g, self.boundary, self.index]
    }
}

/// Closed forms for `Q_p^[k]`, split by the parity of `p`, with the index
/// `(p+1)/2` or `p+1`.
pub fn table_formulas(k: i64, p: i64) -> Result<TableRow> {
    if !(1..=3).contains(&k) || p < 1 {
        return Err(Error::domain(format!("need k in 1..=3 and p >= 1, got k={k}, p={p}")));
    }
    let x = p as i128;
    let odd = p % 2 == 1;
    // (numerator, denominator) pairs for d, δ, β, g, boundary.
    let rows: [(i128, i128); 5] = match (k, odd) {
        (1, true) => [
            ((x + 1) * (x + 3) * (x + 3), 4),
            ((x + 3).pow(3), 8),
            ((x + 1) * (x + 3) * (x + 3) * (x.pow(3) + 11 * x * x + 43 * x + 25), 128),
            ((x + 1) * (x * x + 4 * x - 1), 8),
            ((x + 3) * (x + 3), 2),
        ],
        (1, false) => [
            ((x + 1) * (x + 3) * (x + 3), 1),
            ((x + 2) * (x + 3) * (x + 3), 2),
            ((x + 3) * (x + 3) * (x.pow(4) + 10 * x.pow(3) + 37 * x * x + 50 * x + 24), 8),
            ((x + 2) * (x * x + 4 * x - 1), 2),
            ((x + 3) * (x + 3), 1),
        ],
        (2, true) => [
            ((x + 1) * (x * x + 5 * x + 8), 4),
            ((x + 3) * (x * x + 5 * x + 8), 8),
            ((x + 1) * (x * x + 5 * x + 8) * (x.pow(3) + 10 * x * x + 37 * x + 16), 128),
            (x * (x + 1) * (x + 3), 8),
            (x * x + 5 * x + 8, 2),
        ],
        (2, false) => [
            ((x + 1) * (x * x + 5 * x + 8), 1),
            ((x + 2) * (x * x + 5 * x + 8), 2),
            ((x * x + 5 * x + 8) * (x.pow(4) + 9 * x.pow(3) + 32 * x * x + 42 * x + 20), 8),
            (x.pow(3) + 5 * x * x + 8 * x + 2, 2),
            (x * x + 5 * x + 8, 1),
        ],
        (3, true) => [
            ((x + 1) * (x * x + 4 * x + 7), 4),
            ((x + 3) * (x * x + 4 * x + 7), 8),
            ((x + 1) * (x * x + 4 * x + 7) * (x.pow(3) + 9 * x * x + 31 * x + 7), 128),
            ((x + 1).pow(3), 8),
            (x * x + 4 * x + 7, 2),
        ],
        _ => [
            ((x + 1) * (x * x + 4 * x + 7), 1),
            ((x + 2) * (x * x + 4 * x + 7), 2),
            ((x * x + 4 * x + 7) * (x.pow(4) + 8 * x.pow(3) + 27 * x * x + 34 * x + 16), 8),
            (x.pow(3) + 4 * x * x + 7 * x + 2, 2),
            (x * x + 4 * x + 7, 1),
        ],
    };
    let mut v = [0i64; 5];
    for (slot, (num, den)) in v.iter_mut().zip(rows) {
        if num % den != 0 {
            return Err(Error::internal(format!("closed form {num}/{den} is not integral at k={k}, p={p}")));
        }
        *slot = narrow(num / den, "table formula")?;
    }
    let index = if odd { (p + 1) / 2 } else { p + 1 };
    Ok(TableRow { d: v[0], delta: v[1], beta: v[2], g: v[3], boundary: v[4], index })
}

/// The same invariants computed from `Q_p^[k]` by lattice-point enumeration.
/// β is `C(δ+2, 2) - #(2ℓQ̊ ∩ ℤ²)` with the doubled polygon enumerated directly.
pub fn computed_row(k: i64, p: i64) -> Result<TableRow> {
    let l = ldp_analyze(&canonical_polygon(k, p)?)?;
    let e = embedding_data(&l)?;
    let doubled = dilated_counts(&e.polygon, 2)?.total as i128;
    let n = e.delta as i128 + 1;
    let beta = narrow(n * (n + 1) / 2 - doubled, "beta")?;
    let expected_degree = l.analysis.k2.checked_mul(Rational::from_int(e.index * e.index))?;
    if Rational::from_int(e.degree) != expected_degree {
        return Err(Error::internal(format!("d = {} but ℓ²K² = {expected_degree}", e.degree)));
    }
    Ok(TableRow { d: e.degree, delta: e.delta, beta, g: sectional_genus(&e), boundary: e.boundary, index: e.index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delpezzo::canonical_polygon;

    fn data(k: i64, p: i64) -> EmbeddingData {
        embedding_data(&ldp_analyze(&canonical_polygon(k, p).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(data(2, 1).delta, 7);
        assert_eq!(data(3, 3).points.len(), 22);
        assert_eq!(data(3, 3).delta, 21);
        assert_eq!(sectional_genus(&data(3, 1)), 1);
        // The printed closed form (p+2)(p²+4p-1)/2 gives 22 here; δ = 50 and 25
        // boundary points force 26.
        assert_eq!(sectional_genus(&data(1, 2)), 26);
        assert_eq!(sectional_genus(&data(1, 1)), 1);
    }

    #[test]
    fn closed_form_spot_values() {
        let r = |k, p| table_formulas(k, p).unwrap();
        assert_eq!(r(2, 1), TableRow { d: 7, delta: 7, beta: 14, g: 1, boundary: 7, index: 1 });
        assert_eq!((r(3, 1).d, r(3, 1).delta, r(3, 1).beta, r(3, 1).g), (6, 6, 9, 1));
        assert_eq!((r(3, 3).d, r(3, 3).delta, r(3, 3).beta, r(3, 3).g), (28, 21, 182, 8));
        assert_eq!(r(1, 2).delta, 50);
        assert!(table_formulas(4, 1).is_err());
    }

    #[test]
    fn tables_for_small_p() {
        for k in 1..=3 {
            for p in 1..=12 {
                let (got, want) = (computed_row(k, p).unwrap(), table_formulas(k, p).unwrap());
                if k == 1 && p % 2 == 0 {
                    assert_eq!(got.g, want.g + p + 2, "p={p}");
                    assert_eq!(TableRow { g: want.g, ..got }, want, "p={p}");
                } else {
                    assert_eq!(got, want, "k={k} p={p}");
                }
            }
        }
    }

    #[test]
    fn minimal_systems_of_the_worked_examples() {
        for (k, p, beta) in [(2, 1, 14), (3, 1, 9), (3, 3, 182)] {
            let e = data(k, p);
            let r = minimal_system(&e, RankCheck::Always).unwrap();
            assert_eq!((r.beta, r.beta_formula, r.rank), (beta, beta, Some(beta as usize)));
            let koelman = koelman_quadrics(&e).unwrap();
            assert_eq!(koelman.len(), koelman_count(&e));
            assert!(span_membership(&e, &r, &koelman).unwrap().iter().all(|&b| b));
        }
    }

    #[test]
    fn first_worked_example_relation() {
        let e = data(2, 1);
        let b: Binomial = "z(-1,0)*z(1,-1) - z(0,-1)*z(0,0)".parse().unwrap();
        assert!(koelman_quadrics(&e).unwrap().contains(&b));
    }

    #[test]
    fn fiber_sizes_cover_all_pairs() {
        let e = data(3, 3);
        let n = e.points.len();
        assert_eq!(fibers(&e).values().map(Vec::len).sum::<usize>(), n * (n + 1) / 2);
    }

    #[test]
    fn ideal_file_is_sorted_and_parses_back() {
        let e = data(3, 1);
        let r = minimal_system(&e, RankCheck::Skip).unwrap();
        let text = ideal_file(&r);
        assert!(text.starts_with("# delta = 6\n# d = 6\n# beta = 9\n# g = 1\n"));
        let parsed = parse_ideal(&text).unwrap();
        assert_eq!(parsed.len(), 9);
        assert!(parsed.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ideal_file(&r), text);
    }

    #[test]
    fn out_of_set_binomials_are_rejected() {
        let e = data(2, 1);
        let r = minimal_system(&e, RankCheck::Skip).unwrap();
        let far: Binomial = "z(10,0)*z(0,0) - z(5,0)*z(5,0)".parse().unwrap();
        assert!(span_membership(&e, &r, &[far]).is_err());
    }
}
