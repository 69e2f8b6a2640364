//! Command-line front end for the `ldp` binary.
//!
//! Exit codes: 0 success, 2 invalid input, 3 wrong number of singular cones,
//! 4 internal consistency failure (including table mismatches).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::delpezzo::{canonical_polygon, classify_one_singularity, enumerate_one_singularity, SearchOrder};
use crate::embedding::{computed_row, ideal_file, table_formulas, RankCheck, TableRow};
use crate::error::{Error, Result};
use crate::lattice::io::parse_polygon;
use crate::lattice::LatticePolygon;
use crate::report::Report;

/// Relation-set size up to which `quadrics` checks β by exact rank without `--verify-rank`.
pub const DEFAULT_RANK_LIMIT: usize = 200_000;

#[derive(Debug, Parser)]
#[command(name = "ldp", version, about = "Toric log del Pezzo surfaces with one singularity")]
pub struct Cli {
    /// Worker threads for `tables` and `enumerate`.
    #[arg(long, env = "LDP_WORKERS", global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Index, K², cones, polar polygon, graph and embedding data of a polygon.
    Analyze(Input),
    /// Identify a one-singularity polygon with some `Q_p^[k]`.
    Classify(Input),
    /// Minimal quadric system of the anticanonical embedding.
    Quadrics {
        #[command(flatten)]
        input: Input,
        /// Write the ideal file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Always check β by exact rank, however large the relation set.
        #[arg(long)]
        verify_rank: bool,
    },
    /// Compare enumerated invariants of `Q_p^[k]` with their closed forms.
    Tables {
        #[arg(long, default_value_t = 20)]
        pmax: i64,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive search for one-singularity polygons in [-B,B]².
    Enumerate {
        #[arg(long, default_value_t = 3)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = Order::Forward)]
        order: Order,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Polygon file: one `x y` vertex per line, or a JSON array of pairs.
    #[arg(required_unless_present = "canonical", conflicts_with = "canonical")]
    pub path: Option<PathBuf>,
    /// Use `Q_p^[k]` instead of a file.
    #[arg(long, num_args = 2, value_names = ["K", "P"], allow_negative_numbers = true)]
    pub canonical: Option<Vec<i64>>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Order {
    Forward,
    Reverse,
}

impl Input {
    fn polygon(&self) -> Result<LatticePolygon> {
        match (&self.canonical, &self.path) {
            (Some(kp), _) => canonical_polygon(kp[0], kp[1]),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::domain(format!("cannot read {}: {e}", path.display())))?;
                parse_polygon(&text)
            }
            (None, None) => Err(Error::domain("no input polygon")),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SingularCount(_) => 3,
        Error::Internal(_) | Error::Overflow(_) => 4,
        _ => 2,
    }
}

/// Runs a parsed command, writing results to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Analyze(input) => {
            let r = Report::new(&input.polygon()?, None)?;
            emit(out, input.json, &r, || r.to_text())?;
            Ok(0)
        }
        Command::Classify(input) => {
            let q = input.polygon()?;
            let c = classify_one_singularity(&q)?;
            emit(out, input.json, &c, || {
                format!("Q_{}^[{}]\nk = {}\np = {}\ntransform = {}\nmu = {}\n", c.p, c.k, c.k, c.p, c.transform, c.mu)
            })?;
            Ok(0)
        }
        Command::Quadrics { input, out: path, verify_rank } => {
            let check = if *verify_rank { RankCheck::Always } else { RankCheck::UpTo(DEFAULT_RANK_LIMIT) };
            let r = Report::new(&input.polygon()?, Some(check))?;
            let ideal = r.quadrics.as_ref().expect("quadrics requested");
            match path {
                Some(path) => std::fs::write(path, ideal_file(ideal))
                    .map_err(|e| Error::domain(format!("cannot write {}: {e}", path.display())))?,
                None if !input.json => write_out(out, &ideal_file(ideal))?,
                None => {}
            }
            if input.json {
                write_out(out, &format!("{}\n", serde_json::to_string_pretty(ideal).expect("serializes")))?;
            }
            Ok(0)
        }
        Command::Tables { pmax, json } => tables(*pmax, *json, out),
        Command::Enumerate { bound, order, json } => {
            let order = match order {
                Order::Forward => SearchOrder::Forward,
                Order::Reverse => SearchOrder::Reverse,
            };
            let e = enumerate_one_singularity(*bound, order)?;
            emit(out, *json, &e, || {
                let mut s = format!(
                    "bound {}: {} polygons, {} classes, {} failures\n",
                    e.bound,
                    e.polygons,
                    e.classes.len(),
                    e.failures.len()
                );
                for c in &e.classes {
                    s.push_str(&format!("  Q_{}^[{}]: {} polygons, e.g. {}\n", c.p, c.k, c.count, c.representative));
                }
                for f in &e.failures {
                    s.push_str(&format!("  FAILED {}: {}\n", f.polygon, f.reason));
                }
                s
            })?;
            Ok(if e.failures.is_empty() { 0 } else { 4 })
        }
    }
}

#[derive(Serialize)]
struct TableLine {
    k: i64,
    p: i64,
    computed: TableRow,
    closed_form: TableRow,
}

#[derive(Serialize)]
struct TableSummary {
    rows: Vec<TableLine>,
    passed: usize,
    failed: Vec<String>,
}

fn tables(pmax: i64, json: bool, out: &mut dyn Write) -> Result<i32> {
    if pmax < 1 {
        return Err(Error::domain(format!("--pmax must be positive, got {pmax}")));
    }
    let cells: Vec<(i64, i64)> = (1..=pmax).flat_map(|p| (1..=3).map(move |k| (k, p))).collect();
    let rows = cells
        .par_iter()
        .map(|&(k, p)| Ok(TableLine { k, p, computed: computed_row(k, p)?, closed_form: table_formulas(k, p)? }))
        .collect::<Result<Vec<_>>>()?;
    let mut passed = 0;
    let mut failed = Vec::new();
    for r in &rows {
        for ((name, got), want) in TableRow::FIELDS.iter().zip(r.computed.values()).zip(r.closed_form.values()) {
            if got == want {
                passed += 1;
            } else {
                failed.push(format!("k={} p={} {name}: computed {got}, closed form {want}", r.k, r.p));
            }
        }
    }
    let summary = TableSummary { rows, passed, failed };
    emit(out, json, &summary, || {
        let mut s = String::from("k p d delta beta g boundary index\n");
        for r in &summary.rows {
            let c = r.computed;
            s.push_str(&format!("{} {} {} {} {} {} {} {}\n", r.k, r.p, c.d, c.delta, c.beta, c.g, c.boundary, c.index));
        }
        for f in &summary.failed {
            s.push_str(&format!("MISMATCH {f}\n"));
        }
        if summary.failed.is_empty() {
            s.push_str(&format!("{} checks passed\n", summary.passed));
        } else {
            s.push_str(&format!("{} checks passed, {} failed\n", summary.passed, summary.failed.len()));
        }
        s
    })?;
    Ok(if summary.failed.is_empty() { 0 } else { 4 })
}

fn emit<T: Serialize>(out: &mut dyn Write, json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if json {
        write_out(out, &format!("{}\n", serde_json::to_string_pretty(value).expect("serializes")))
    } else {
        write_out(out, &text())
    }
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes()).map_err(|e| Error::domain(format!("cannot write output: {e}")))
}
