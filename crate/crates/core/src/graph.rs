//! Simple graphs on `[n]`, indifference graphs of Dyck paths, claw detection
//! and the greedy coloring.

use std::fmt;

use crate::dyck::{DyckPath, HessenbergFunction};
use crate::error::{Error, Result};

/// Vertex bitmasks are `u64`.
pub const MAX_VERTICES: usize = 64;

/// An undirected graph without loops. Vertices are `0..n` internally and
/// `1..=n` in every textual format.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!("{n} vertices (limit {MAX_VERTICES})")));
        }
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            g.adj[u] = mask_below(n) & !(1u64 << u);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} outside [1, {n}]")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            g.add_edge(u - 1, v - 1);
        }
        Ok(g)
    }

    /// Parses `"1-2,2-3"` with an explicit vertex count.
    pub fn parse_edges(n: usize, s: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("edge {tok:?} is not of the form i-j")))?;
            let a = a.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in {tok:?}")))?;
            let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in {tok:?}")))?;
            edges.push((a, b));
        }
        Self::from_edges(n, &edges)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `u` as a bitmask.
    pub fn neighbors(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// 1-based edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u + 1, v + 1));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn complement(&self) -> SimpleGraph {
        let full = mask_below(self.n);
        SimpleGraph {
            n: self.n,
            adj: (0..self.n).map(|u| full & !self.adj[u] & !(1u64 << u)).collect(),
        }
    }

    pub fn is_independent(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[u] & set != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_clique(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (set & !(1u64 << u)) & !self.adj[u] != 0 {
                return false;
            }
        }
        true
    }

    /// True iff no vertex has three pairwise non-adjacent neighbours.
    pub fn is_claw_free(&self) -> bool {
        for c in 0..self.n {
            let nb: Vec<usize> = bits(self.adj[c]).collect();
            for (x, &a) in nb.iter().enumerate() {
                for (y, &b) in nb.iter().enumerate().skip(x + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[y + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// First-fit coloring in the vertex order `0..n`; colors start at 0.
    pub fn greedy_coloring(&self) -> Vec<usize> {
        let mut color = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let mut used = vec![false; self.n + 1];
            for u in bits(self.adj[v]).filter(|&u| u < v) {
                used[color[u]] = true;
            }
            color[v] = used.iter().position(|&b| !b).unwrap();
        }
        color
    }

    /// The subgraph induced on `keep` (listed in increasing order), relabelled `0..`.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph { n: keep.len(), adj: vec![0; keep.len()] };
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                if a != b && self.has_edge(u, v) {
                    g.adj[a] |= 1 << b;
                }
            }
        }
        g
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}:{}", self.n, e.join(","))
    }
}

/// A coloring that has been checked to be proper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProperColoring {
    colors: Vec<usize>,
}

impl ProperColoring {
    /// `colors[v]` is the color of vertex `v` (0-based colors).
    pub fn new(graph: &SimpleGraph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != graph.n() {
            return Err(Error::SizeMismatch(colors.len(), graph.n()));
        }
        for (u, v) in graph.edges() {
            if colors[u - 1] == colors[v - 1] {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} is monochromatic")));
            }
        }
        Ok(ProperColoring { colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color class sizes, one entry per color up to the largest used.
    pub fn weight(&self) -> Vec<usize> {
        let k = self.colors.iter().max().map_or(0, |m| m + 1);
        let mut w = vec![0; k];
        for &c in &self.colors {
            w[c] += 1;
        }
        w
    }
}

/// Edge `(i, j)`, `i < j`, iff `j <= h(i)`.
pub fn indifference_graph(d: &DyckPath) -> Result<SimpleGraph> {
    indifference_graph_of(&d.hessenberg())
}

pub fn indifference_graph_of(h: &HessenbergFunction) -> Result<SimpleGraph> {
    let n = h.len();
    let mut g = SimpleGraph::empty(n)?;
    for (i, &hi) in h.values().iter().enumerate() {
        for j in i + 1..hi {
            g.add_edge(i, j);
        }
    }
    Ok(g)
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}
