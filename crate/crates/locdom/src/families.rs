//! Generators for the named graph families: paths, cycles, wheels,
//! complete graphs, stars, complete bipartite graphs and bi-stars.
//!
//! Labeling conventions (fixed so tests are deterministic):
//! - `Path`: 0–1–…–(n−1).
//! - `Cycle`: ring 0–1–…–(n−1)–0.
//! - `Wheel`: cycle on 0..n−1, hub = n−1 joined to all cycle vertices.
//! - `Complete`: all pairs.
//! - `Star`: center = n−1 joined to 0..n−1.
//! - `CompleteBipartite` (r, s): sides 0..r and r..r+s, all cross edges.
//! - `Bistar` (r, s): centers 0 and 1 joined; 0 carries leaves 2..=r,
//!   1 carries leaves r+1..r+s. Stable sets have sizes r and s.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Path,
    Cycle,
    Wheel,
    Complete,
    Star,
    CompleteBipartite,
    Bistar,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Complete => "complete",
            FamilyKind::Star => "star",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Bistar => "bistar",
        }
    }

    pub fn takes_pair(self) -> bool {
        matches!(self, FamilyKind::CompleteBipartite | FamilyKind::Bistar)
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "wheel" => FamilyKind::Wheel,
            "complete" => FamilyKind::Complete,
            "star" => FamilyKind::Star,
            "complete_bipartite" => FamilyKind::CompleteBipartite,
            "bistar" => FamilyKind::Bistar,
            other => return Err(Error::FamilyParams(format!("unknown family kind `{other}`"))),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyParams {
    Order(usize),
    Pair { r: usize, s: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: FamilyParams,
}

impl FamilySpec {
    pub fn one_param(kind: FamilyKind, n: usize) -> Self {
        FamilySpec {
            kind,
            params: FamilyParams::Order(n),
        }
    }

    pub fn two_param(kind: FamilyKind, r: usize, s: usize) -> Self {
        FamilySpec {
            kind,
            params: FamilyParams::Pair { r, s },
        }
    }

    pub fn order(&self) -> usize {
        match self.params {
            FamilyParams::Order(n) => n,
            FamilyParams::Pair { r, s } => r + s,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params {
            FamilyParams::Order(n) => write!(f, "{}({n})", self.kind.name()),
            FamilyParams::Pair { r, s } => write!(f, "{}({r},{s})", self.kind.name()),
        }
    }
}

/// Builds the named graph. Lower bounds here are the loosest ones under
/// which the construction makes sense; the closed-form lookup in the
/// solver enforces the stricter validity ranges.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let bad = |msg: String| Err(Error::FamilyParams(msg));
    match (spec.kind, spec.params) {
        (FamilyKind::Path, FamilyParams::Order(n)) => {
            if n < 1 {
                return bad("path requires n >= 1".into());
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        (FamilyKind::Cycle, FamilyParams::Order(n)) => {
            if n < 3 {
                return bad(format!("cycle requires n >= 3, got {n}"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        (FamilyKind::Wheel, FamilyParams::Order(n)) => {
            if n < 4 {
                return bad(format!("wheel requires n >= 4, got {n}"));
            }
            let hub = n - 1;
            let mut edges: Vec<_> = (0..n - 1).map(|i| (i, (i + 1) % (n - 1))).collect();
            edges.extend((0..n - 1).map(|i| (i, hub)));
            Graph::from_edges(n, &edges)
        }
        (FamilyKind::Complete, FamilyParams::Order(n)) => {
            if n < 1 {
                return bad("complete graph requires n >= 1".into());
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        (FamilyKind::Star, FamilyParams::Order(n)) => {
            if n < 2 {
                return bad(format!("star requires n >= 2, got {n}"));
            }
            let center = n - 1;
            let edges: Vec<_> = (0..n - 1).map(|i| (i, center)).collect();
            Graph::from_edges(n, &edges)
        }
        (FamilyKind::CompleteBipartite, FamilyParams::Pair { r, s }) => {
            if r < 1 || s < r {
                return bad(format!("complete bipartite requires 1 <= r <= s, got ({r},{s})"));
            }
            let mut edges = Vec::new();
            for u in 0..r {
                for w in r..r + s {
                    edges.push((u, w));
                }
            }
            Graph::from_edges(r + s, &edges)
        }
        (FamilyKind::Bistar, FamilyParams::Pair { r, s }) => {
            if r < 2 || s < r {
                return bad(format!("bi-star requires 2 <= r <= s, got ({r},{s})"));
            }
            let mut edges = vec![(0, 1)];
            edges.extend((2..=r).map(|leaf| (0, leaf)));
            edges.extend((r + 1..r + s).map(|leaf| (1, leaf)));
            Graph::from_edges(r + s, &edges)
        }
        (kind, params) => bad(format!(
            "family `{}` does not take parameters {:?}",
            kind.name(),
            params
        )),
    }
}
