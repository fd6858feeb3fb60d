//! Bipartition detection for connected graphs.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The stable-set pair of a connected bipartite graph, normalized so that
/// `|u_side| <= |w_side|` (ties broken by putting the side containing
/// vertex 0 first).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bipartition {
    pub u_side: VertexSet,
    pub w_side: VertexSet,
}

impl Bipartition {
    pub fn r(&self) -> usize {
        self.u_side.len()
    }

    pub fn s(&self) -> usize {
        self.w_side.len()
    }
}

/// 2-colors a connected graph. Returns `Ok(None)` when an odd cycle
/// exists. Disconnected input is rejected: the bipartition of a
/// disconnected graph is ambiguous.
pub fn bipartition(g: &Graph) -> Result<Option<Bipartition>> {
    let comp = g.component_of(0);
    if comp.len() != g.order() {
        let outside = g.vertex_set().difference(comp).min().unwrap();
        return Err(Error::Disconnected { a: 0, b: outside });
    }
    let mut color = vec![None; g.order()];
    color[0] = Some(false);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        let c = color[v].unwrap();
        for w in g.neighbors(v).iter() {
            match color[w] {
                None => {
                    color[w] = Some(!c);
                    queue.push_back(w);
                }
                Some(cw) if cw == c => return Ok(None),
                Some(_) => {}
            }
        }
    }
    let side_a: VertexSet = (0..g.order()).filter(|&v| color[v] == Some(false)).collect();
    let side_b = g.vertex_set().difference(side_a);
    let (u_side, w_side) = if side_a.len() <= side_b.len() {
        (side_a, side_b)
    } else {
        (side_b, side_a)
    };
    Ok(Some(Bipartition { u_side, w_side }))
}

/// Whether the graph (not necessarily connected) admits a 2-coloring.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut color = vec![None; g.order()];
    for start in 0..g.order() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for w in g.neighbors(v).iter() {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}
