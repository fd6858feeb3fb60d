//! Undirected simple graphs over dense vertex indices `0..n`, with
//! adjacency stored as one bit set per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on graph order imposed by the `u64` bit-set representation.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a graph with at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for v in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// An undirected simple graph. Adjacency is symmetric and irreflexive by
/// construction; both are debug-asserted after every mutation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices (n >= 1).
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::EndpointOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::EndpointOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop { v });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Same vertex set, edge present iff absent here.
    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| all.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for w in self.adj[v].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    frontier.push(w);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = remaining.min() {
            let comp = self.component_of(v);
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Checks the structural invariants; used by tests and debug builds.
    pub fn check_invariants(&self) -> bool {
        let all = VertexSet::full(self.n);
        self.adj.len() == self.n
            && (0..self.n).all(|v| {
                self.adj[v].is_subset_of(all)
                    && !self.adj[v].contains(v)
                    && self.adj[v].iter().all(|w| self.adj[w].contains(v))
            })
    }

    /// Parses the edge-list text format: first line `n m`, then `m` lines `u v`.
    pub fn from_edge_list_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (lineno, header) = lines.next().ok_or_else(|| Error::EdgeList {
            line: 1,
            reason: "missing header line".into(),
        })?;
        let mut it = header.split_whitespace();
        let parse = |tok: Option<&str>, lineno: usize| -> Result<usize> {
            tok.ok_or_else(|| Error::EdgeList {
                line: lineno + 1,
                reason: "expected two integers".into(),
            })?
            .parse()
            .map_err(|e| Error::EdgeList {
                line: lineno + 1,
                reason: format!("{e}"),
            })
        };
        let n = parse(it.next(), lineno)?;
        let m = parse(it.next(), lineno)?;
        let mut g = Graph::empty(n)?;
        let mut count = 0;
        for (lineno, line) in lines {
            let mut it = line.split_whitespace();
            let u = parse(it.next(), lineno)?;
            let v = parse(it.next(), lineno)?;
            g.add_edge(u, v)?;
            count += 1;
        }
        if count != m {
            return Err(Error::EdgeList {
                line: count + 2,
                reason: format!("header declares {m} edges, found {count}"),
            });
        }
        Ok(g)
    }

    /// Emits the edge-list text format.
    pub fn to_edge_list_text(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
