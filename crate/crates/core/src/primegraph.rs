//! Gruenberg–Kegel prime graphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arith::Factorization;
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`maximal_independent_sets`].
pub const MAX_ENUMERATION_VERTICES: usize = 32;

/// Vertices are the primes of a group order; `p -- q` iff the group has an
/// element of order `pq`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeGraph {
    vertices: Vec<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl PrimeGraph {
    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    /// Edges as `(p, q)` with `p < q`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges.iter().copied()
    }

    pub fn adjacent(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&(p.min(q), p.max(q)))
    }

    pub fn neighbors(&self, p: u64) -> Vec<u64> {
        self.vertices.iter().copied().filter(|&q| self.adjacent(p, q)).collect()
    }

    fn index_of(&self, p: u64) -> Option<usize> {
        self.vertices.binary_search(&p).ok()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"{name}\" {{");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v};");
        }
        for (p, q) in &self.edges {
            let _ = writeln!(out, "  {p} -- {q};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(p, q)| [p, q]).collect(),
            adjacency: self
                .vertices
                .iter()
                .map(|&p| (p.to_string(), serde_json::Value::from(self.neighbors(p))))
                .collect(),
        }
    }
}

/// JSON form: vertex list, sorted edge list, and an adjacency object keyed
/// by prime in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    pub adjacency: serde_json::Map<String, serde_json::Value>,
}

/// Prime graph on the primes of `order`, with `p -- q` iff `has_order(p*q)`.
pub fn build_graph(order: &Factorization, has_order: impl Fn(u64) -> bool) -> PrimeGraph {
    let vertices: Vec<u64> = order.primes().collect();
    let mut edges = BTreeSet::new();
    for (i, &p) in vertices.iter().enumerate() {
        for &q in &vertices[i + 1..] {
            if has_order(p * q) {
                edges.insert((p, q));
            }
        }
    }
    PrimeGraph { vertices, edges }
}

pub fn is_independent(g: &PrimeGraph, set: &[u64]) -> Result<bool> {
    if let Some(&p) = set.iter().find(|&&p| g.index_of(p).is_none()) {
        return Err(Error::InvalidArgument(format!("{p} is not a vertex of the graph")));
    }
    Ok(set
        .iter()
        .enumerate()
        .all(|(i, &p)| set[i + 1..].iter().all(|&q| p == q || !g.adjacent(p, q))))
}

pub fn is_complete(g: &PrimeGraph) -> bool {
    let n = g.vertices.len();
    g.edges.len() == n * n.saturating_sub(1) / 2
}

/// All inclusion-maximal independent sets, largest first, ties in
/// lexicographic order.
pub fn maximal_independent_sets(g: &PrimeGraph) -> Result<Vec<Vec<u64>>> {
    let n = g.vertices.len();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::ResourceLimit(format!(
            "{n} vertices exceeds the limit of {MAX_ENUMERATION_VERTICES}"
        )));
    }
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    // non-neighbourhood masks; maximal independent sets are maximal cliques
    // of the complement graph
    let full: u64 = (1u64 << n) - 1;
    let non_adj: Vec<u64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && !g.adjacent(g.vertices[i], g.vertices[j]))
                .fold(0u64, |m, j| m | 1 << j)
        })
        .collect();
    let mut found = Vec::new();
    bron_kerbosch(0, full, 0, &non_adj, &mut found);
    let mut sets: Vec<Vec<u64>> = found
        .into_iter()
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| g.vertices[i]).collect())
        .collect();
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, adj: &[u64], out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        let bit = 1u64 << v;
        bron_kerbosch(r | bit, p & adj[v], x & adj[v], adj, out);
        p &= !bit;
        x |= bit;
    }
}
