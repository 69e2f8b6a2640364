//! Sparse fraction-free row echelon form over the integers.
//!
//! Rows are kept with pairwise distinct leading columns. A new row is reduced
//! against the stored pivot sharing its leading column by `r <- s_c r - r_c s`
//! and then divided by its content, so entries stay small for the ±1 matrices
//! met here. Rank over ℚ equals the number of stored rows.

use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{narrow, Result};

pub type SparseRow = Vec<(usize, i64)>;

#[derive(Debug, Default)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns true iff it was independent of the stored rows.
    pub fn insert(&mut self, row: SparseRow) -> Result<bool> {
        let r = self.reduce(row)?;
        match r.first() {
            Some(&(c, _)) => {
                self.pivots.insert(c, r);
                Ok(true)
            }
            None => Ok(false),
        }
    }

    pub fn contains(&self, row: SparseRow) -> Result<bool> {
        Ok(self.reduce(row)?.is_empty())
    }

    fn reduce(&self, row: SparseRow) -> Result<SparseRow> {
        let mut r = normalize(row);
        while let Some(&(c, rc)) = r.first() {
            let Some(s) = self.pivots.get(&c) else { break };
            let sc = s[0].1;
            r = combine(sc, &r, rc, s)?;
        }
        Ok(r)
    }
}

fn normalize(mut row: SparseRow) -> SparseRow {
    row.sort_unstable_by_key(|&(c, _)| c);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

/// `a*r - b*s` divided by its content.
fn combine(a: i64, r: &SparseRow, b: i64, s: &SparseRow) -> Result<SparseRow> {
    let (a, b) = (a as i128, b as i128);
    let mut wide: Vec<(usize, i128)> = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        let (c, v) = match (r.get(i), s.get(j)) {
            (Some(&(ci, vi)), Some(&(cj, _))) if ci < cj => {
                i += 1;
                (ci, a * vi as i128)
            }
            (Some(&(ci, _)), Some(&(cj, vj))) if cj < ci => {
                j += 1;
                (cj, -b * vj as i128)
            }
            (Some(&(ci, vi)), Some(&(_, vj))) => {
                i += 1;
                j += 1;
                (ci, a * vi as i128 - b * vj as i128)
            }
            (Some(&(ci, vi)), None) => {
                i += 1;
                (ci, a * vi as i128)
            }
            (None, Some(&(cj, vj))) => {
                j += 1;
                (cj, -b * vj as i128)
            }
            (None, None) => unreachable!(),
        };
        if v != 0 {
            wide.push((c, v));
        }
    }
    let content = wide.iter().fold(0i128, |g, &(_, v)| g.gcd(&v));
    wide.into_iter()
        .map(|(c, v)| Ok((c, narrow(v / content.max(1), "elimination")?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dense_rank(mut m: Vec<Vec<f64>>) -> usize {
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())) else { break };
            if m[piv][c].abs() < 1e-9 {
                continue;
            }
            m.swap(rank, piv);
            for r in 0..m.len() {
                if r != rank {
                    let f = m[r][c] / m[rank][c];
                    let pivot = m[rank].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot) {
                        *x -= f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn matches_dense_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let (rows, cols) = (rng.gen_range(1..8), rng.gen_range(1..8));
            let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect()).collect();
            let mut e = Echelon::new();
            for r in &m {
                e.insert(r.iter().enumerate().map(|(c, &v)| (c, v)).collect()).unwrap();
            }
            let dense = m.iter().map(|r| r.iter().map(|&v| v as f64).collect()).collect();
            assert_eq!(e.rank(), dense_rank(dense));
            for r in &m {
                assert!(e.contains(r.iter().enumerate().map(|(c, &v)| (c, v)).collect()).unwrap());
            }
        }
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        e.insert(vec![(0, 1), (1, -1)]).unwrap();
        e.insert(vec![(1, 1), (2, -1)]).unwrap();
        assert!(e.contains(vec![(0, 1), (2, -1)]).unwrap());
        assert!(!e.contains(vec![(0, 1), (3, -1)]).unwrap());
        assert!(!e.insert(vec![(2, 2), (0, -2)]).unwrap());
        assert_eq!(e.rank(), 2);
    }
}
