use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::elimination::Echelon;
use super::{Binomial, EmbeddingData};
use crate::error::{Error, Result};
use crate::lattice::{minkowski_double, LatticePoint};

/// When to cross-check β by the exact rank of the full relation set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankCheck {
    Skip,
    Always,
    /// Only when the full relation set has at most this many binomials.
    UpTo(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricIdealReport {
    pub delta: i64,
    pub degree: i64,
    pub genus: i64,
    pub beta: i64,
    /// `C(δ+2, 2) - #(2ℓQ̊ ∩ ℤ²)`.
    pub beta_formula: i64,
    pub generators: Vec<Binomial>,
    /// Rank of the full relation set, when it was computed.
    pub rank: Option<usize>,
}

/// Index pairs `(i, j)`, `i <= j`, of the coordinate points grouped by `points[i] + points[j]`.
pub fn fibers(e: &EmbeddingData) -> BTreeMap<LatticePoint, Vec<(usize, usize)>> {
    let mut out: BTreeMap<LatticePoint, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..e.points.len() {
        for j in i..e.points.len() {
            out.entry(e.points[i] + e.points[j]).or_default().push((i, j));
        }
    }
    out
}

/// Number of binomials in the full relation set, `Σ C(m, 2)` over the fibers.
pub fn koelman_count(e: &EmbeddingData) -> usize {
    fibers(e).values().map(|f| f.len() * (f.len() - 1) / 2).sum()
}

/// Every quadratic binomial `z_a z_b - z_c z_d` with `a + b = c + d`.
pub fn koelman_quadrics(e: &EmbeddingData) -> Result<Vec<Binomial>> {
    let mut out = Vec::new();
    for pairs in fibers(e).values() {
        for (s, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[s + 1..] {
                out.push(Binomial::new((e.points[a], e.points[b]), (e.points[c], e.points[d]))?);
            }
        }
    }
    Ok(out)
}

/// In each fiber, the least pair minus each of the others. The ideal has no linear
/// forms, so any basis of its degree-two part is a minimal generating system; these
/// binomials are such a basis.
pub fn minimal_system(e: &EmbeddingData, check: RankCheck) -> Result<QuadricIdealReport> {
    if e.boundary < 4 {
        return Err(Error::domain(format!("only {} boundary points; quadrics need at least 4", e.boundary)));
    }
    let fibers = fibers(e);
    let mut generators = Vec::new();
    for pairs in fibers.values() {
        let (a, b) = pairs[0];
        for &(c, d) in &pairs[1..] {
            generators.push(Binomial::new((e.points[a], e.points[b]), (e.points[c], e.points[d]))?);
        }
    }
    let n = e.points.len() as i64;
    let beta_formula = n * (n + 1) / 2 - minkowski_double(&e.polygon)?;
    let beta = generators.len() as i64;
    if beta != beta_formula || fibers.len() as i64 != minkowski_double(&e.polygon)? {
        return Err(Error::internal(format!("{beta} spanning-tree generators, formula gives {beta_formula}")));
    }
    let full = fibers.values().map(|f| f.len() * (f.len() - 1) / 2).sum::<usize>();
    let run = match check {
        RankCheck::Skip => false,
        RankCheck::Always => true,
        RankCheck::UpTo(limit) => full <= limit,
    };
    let mut report = QuadricIdealReport {
        delta: e.delta,
        degree: e.degree,
        genus: e.interior,
        beta,
        beta_formula,
        generators,
        rank: None,
    };
    if run {
        let rank = rank_of(e, &koelman_quadrics(e)?)?;
        let own = rank_of(e, &report.generators)?;
        if rank as i64 != beta || own as i64 != beta {
            return Err(Error::internal(format!(
                "rank {rank} of the full relation set and {own} of the generators, expected {beta}"
            )));
        }
        report.rank = Some(rank);
    }
    Ok(report)
}

struct Columns<'a> {
    index: HashMap<LatticePoint, usize>,
    points: &'a [LatticePoint],
}

impl<'a> Columns<'a> {
    fn new(points: &'a [LatticePoint]) -> Self {
        Columns { index: points.iter().enumerate().map(|(i, &p)| (p, i)).collect(), points }
    }

    /// Column of the monomial `z_a z_b` in the upper-triangular pair numbering.
    fn monomial(&self, a: LatticePoint, b: LatticePoint) -> Result<usize> {
        let find = |v: LatticePoint| {
            self.index.get(&v).copied().ok_or_else(|| Error::domain(format!("{v} is not a coordinate point")))
        };
        let (i, j) = (find(a)?, find(b)?);
        let (i, j) = (i.min(j), i.max(j));
        Ok(i * self.points.len() + j)
    }

    fn row(&self, b: &Binomial) -> Result<Vec<(usize, i64)>> {
        Ok(vec![(self.monomial(b.plus.0, b.plus.1)?, 1), (self.monomial(b.minus.0, b.minus.1)?, -1)])
    }
}

fn rank_of(e: &EmbeddingData, binomials: &[Binomial]) -> Result<usize> {
    let cols = Columns::new(&e.points);
    let mut ech = Echelon::new();
    for b in binomials {
        ech.insert(cols.row(b)?)?;
    }
    Ok(ech.rank())
}

/// Whether each binomial lies in the rational span of the report's generators.
pub fn span_membership(e: &EmbeddingData, report: &QuadricIdealReport, candidates: &[Binomial]) -> Result<Vec<bool>> {
    let cols = Columns::new(&e.points);
    let mut ech = Echelon::new();
    for b in &report.generators {
        ech.insert(cols.row(b)?)?;
    }
    candidates.iter().map(|b| ech.contains(cols.row(b)?)).collect()
}

/// Deterministic ideal file: a header of `#` comments, then one sorted binomial per line.
pub fn ideal_file(report: &QuadricIdealReport) -> String {
    let mut lines: Vec<Binomial> = report.generators.clone();
    lines.sort();
    let mut out = format!(
        "# delta = {}\n# d = {}\n# beta = {}\n# g = {}\n",
        report.delta, report.degree, report.beta, report.genus
    );
    for b in lines {
        out.push_str(&b.to_string());
        out.push('\n');
    }
    out
}

/// Reads the binomial lines of an ideal file, skipping comments and blank lines.
pub fn parse_ideal(text: &str) -> Result<Vec<Binomial>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| l.parse().map_err(|e: Error| Error::Parse { line: i + 1, msg: e.to_string() }))
        .collect()
}
