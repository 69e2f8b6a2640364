//! Weighted circular graphs attached to complete fans. Two compact toric surfaces
//! are isomorphic iff their graphs agree up to rotation, possibly after reversing
//! one of them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cones::socius;
use crate::error::{Error, Result};
use crate::fans::{analyze_fan, CompleteFan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    /// `-r_i`.
    pub weight: i64,
    /// Weight `(p, q)` of the edge to the next node.
    pub p: i64,
    pub q: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Anticlockwise,
    Clockwise,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Wve2cGraph {
    nodes: Vec<Node>,
    direction: Direction,
}

impl Wve2cGraph {
    pub fn new(nodes: Vec<Node>, direction: Direction) -> Result<Self> {
        if nodes.len() < 3 {
            return Err(Error::domain(format!("a circular graph needs at least 3 nodes, got {}", nodes.len())));
        }
        for n in &nodes {
            if n.q < 1 || n.p < 0 || n.p >= n.q || num_integer::gcd(n.p, n.q) != 1 {
                return Err(Error::domain(format!("invalid edge weight ({},{})", n.p, n.q)));
            }
        }
        Ok(Wve2cGraph { nodes, direction })
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn vertex_weights(&self) -> Vec<i64> {
        self.nodes.iter().map(|n| n.weight).collect()
    }
}

/// `[w0] -(p,q)- [w1] - [w2] -`; edges of weight (0,1) are left unlabeled.
impl fmt::Display for Wve2cGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for n in &self.nodes {
            out.push_str(&format!("[{}] ", n.weight));
            if n.q == 1 {
                out.push_str("- ");
            } else {
                out.push_str(&format!("-({},{})- ", n.p, n.q));
            }
        }
        f.write_str(out.trim_end())
    }
}

pub fn graph_of(f: &CompleteFan) -> Result<Wve2cGraph> {
    let a = analyze_fan(f)?;
    let nodes = a.r.iter().zip(&a.cones).map(|(&r, c)| Node { weight: -r, p: c.p, q: c.q }).collect();
    Wve2cGraph::new(nodes, Direction::Anticlockwise)
}

/// Walks the cycle the other way round; every edge weight `(p, q)` becomes `(p̂, q)`.
pub fn reverse_graph(g: &Wve2cGraph) -> Result<Wve2cGraph> {
    let nu = g.len();
    let mut nodes = Vec::with_capacity(nu);
    for j in 0..nu {
        let i = nu - 1 - j;
        let edge = g.nodes[(i + nu - 1) % nu];
        nodes.push(Node { weight: g.nodes[i].weight, p: socius(edge.p, edge.q)?, q: edge.q });
    }
    let direction = match g.direction {
        Direction::Anticlockwise => Direction::Clockwise,
        Direction::Clockwise => Direction::Anticlockwise,
    };
    Ok(Wve2cGraph { nodes, direction })
}

/// True iff some rotation of `a` carries all vertex and edge weights onto `b`.
pub fn graphs_isomorphic(a: &Wve2cGraph, b: &Wve2cGraph) -> bool {
    a.len() == b.len() && rotation_of(&a.nodes, &b.nodes).is_some()
}

/// Offset `s` with `a[(i + s) % n] == b[i]` for all `i`, found by KMP on `a a`.
fn rotation_of(a: &[Node], b: &[Node]) -> Option<usize> {
    let n = b.len();
    if n == 0 {
        return Some(0);
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && b[i] != b[k] {
            k = fail[k - 1];
        }
        if b[i] == b[k] {
            k += 1;
        }
        fail[i] = k;
    }
    k = 0;
    for i in 0..2 * n - 1 {
        let c = a[i % n];
        while k > 0 && c != b[k] {
            k = fail[k - 1];
        }
        if c == b[k] {
            k += 1;
        }
        if k == n {
            return Some(i + 1 - n);
        }
    }
    None
}

pub fn surfaces_isomorphic(f1: &CompleteFan, f2: &CompleteFan) -> Result<bool> {
    let (g1, g2) = (graph_of(f1)?, graph_of(f2)?);
    Ok(graphs_isomorphic(&g1, &g2) || graphs_isomorphic(&g1, &reverse_graph(&g2)?))
}

/// Lexicographically least rotation of the node sequence of `g` or of its reverse;
/// equal keys exactly for isomorphic surfaces.
pub fn canonical_key(g: &Wve2cGraph) -> Result<Vec<Node>> {
    let fwd = least_rotation(&g.nodes);
    let rev = least_rotation(&reverse_graph(g)?.nodes);
    Ok(fwd.min(rev))
}

fn least_rotation(nodes: &[Node]) -> Vec<Node> {
    let n = nodes.len();
    let best = (0..n)
        .min_by(|&s, &t| (0..n).map(|i| nodes[(s + i) % n]).cmp((0..n).map(|i| nodes[(t + i) % n])))
        .unwrap_or(0);
    let mut out = nodes.to_vec();
    out.rotate_left(best);
    out
}
