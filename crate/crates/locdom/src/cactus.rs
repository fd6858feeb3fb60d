//! Cactus detection and the component/cycle/excess bookkeeping used to
//! bound subgraph orders, plus a seeded random cactus generator for the
//! verification harness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Blocks (biconnected components) of the graph, each as a list of
/// edges. Bridges appear as single-edge blocks.
pub fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        timer: usize,
        edge_stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }

    fn dfs(st: &mut State<'_>, v: usize, parent: Option<usize>) {
        st.disc[v] = st.timer;
        st.low[v] = st.timer;
        st.timer += 1;
        let mut skipped_parent_edge = false;
        for w in st.g.neighbors(v).iter() {
            if Some(w) == parent && !skipped_parent_edge {
                skipped_parent_edge = true; // simple graphs: one parent edge
                continue;
            }
            if st.disc[w] == usize::MAX {
                st.edge_stack.push((v, w));
                dfs(st, w, Some(v));
                st.low[v] = st.low[v].min(st.low[w]);
                if st.low[w] >= st.disc[v] {
                    // v separates the subtree of w; pop its block
                    let mut block = Vec::new();
                    while let Some(&top) = st.edge_stack.last() {
                        block.push(st.edge_stack.pop().unwrap());
                        if top == (v, w) {
                            break;
                        }
                    }
                    st.out.push(block);
                }
            } else if st.disc[w] < st.disc[v] {
                st.edge_stack.push((v, w));
                st.low[v] = st.low[v].min(st.disc[w]);
            }
        }
    }

    let n = g.order();
    let mut st = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        out: Vec::new(),
    };
    for root in 0..n {
        if st.disc[root] == usize::MAX {
            dfs(&mut st, root, None);
            debug_assert!(st.edge_stack.is_empty());
        }
    }
    st.out
}

fn block_vertex_count(block: &[(usize, usize)]) -> usize {
    let mut vs: Vec<usize> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs.len()
}

/// Every block is a single edge or a single cycle, in every component.
pub fn is_cactus(g: &Graph) -> bool {
    blocks(g)
        .iter()
        .all(|b| b.len() == 1 || b.len() == block_vertex_count(b))
}

/// Component/cycle/excess statistics of a cactus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CactusStats {
    pub cc: usize,
    pub cy: usize,
    /// `|E| - 4 * cy`; nonnegative for bipartite cactus.
    pub ex: i64,
    pub order: usize,
    pub size: usize,
}

/// Computes the statistics; errors on non-cactus input. The Euler-style
/// identity `order = size - cy + cc` is debug-asserted.
pub fn cactus_stats(g: &Graph) -> Result<CactusStats> {
    if !is_cactus(g) {
        return Err(Error::NotCactus);
    }
    let cy = blocks(g).iter().filter(|b| b.len() > 1).count();
    let stats = CactusStats {
        cc: g.components().len(),
        cy,
        ex: g.size() as i64 - 4 * cy as i64,
        order: g.order(),
        size: g.size(),
    };
    debug_assert_eq!(stats.order, stats.size - stats.cy + stats.cc);
    Ok(stats)
}

/// Whether a connected bipartite cactus meets `|V| = (3/4)|E| + 1`,
/// which happens exactly when every block is a 4-cycle.
pub fn tightness_check(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            a: 0,
            b: g.vertex_set().difference(g.component_of(0)).min().unwrap_or(0),
        });
    }
    let stats = cactus_stats(g)?;
    Ok(4 * stats.order == 3 * stats.size + 4)
}

/// Parameters for [`random_cactus`].
#[derive(Clone, Copy, Debug)]
pub struct CactusParams {
    pub max_blocks: usize,
    /// Restrict cycle blocks to even lengths so the result is bipartite.
    pub bipartite: bool,
    /// Chance of starting an extra connected component per block step.
    pub new_component_prob: f64,
}

impl Default for CactusParams {
    fn default() -> Self {
        CactusParams {
            max_blocks: 8,
            bipartite: false,
            new_component_prob: 0.15,
        }
    }
}

/// Builds a random cactus by gluing bridge and cycle blocks onto random
/// existing vertices.
pub fn random_cactus(seed: u64, params: &CactusParams) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 1usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let nblocks = rng.gen_range(1..=params.max_blocks);
    for _ in 0..nblocks {
        let attach = if rng.gen_bool(params.new_component_prob) && n + 1 < MAX_VERTICES {
            n += 1;
            n - 1
        } else {
            rng.gen_range(0..n)
        };
        let cycle_len = if params.bipartite {
            *[4usize, 4, 6].get(rng.gen_range(0..3)).unwrap()
        } else {
            rng.gen_range(3..=6)
        };
        let is_cycle = rng.gen_bool(0.6);
        if is_cycle && n + cycle_len - 1 <= MAX_VERTICES {
            let mut prev = attach;
            for _ in 0..cycle_len - 1 {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, attach));
        } else if n + 1 <= MAX_VERTICES {
            edges.push((attach, n));
            n += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::is_bipartite;
    use crate::families::{generate, FamilyKind, FamilySpec};

    fn cycle(n: usize) -> Graph {
        generate(&FamilySpec::one_param(FamilyKind::Cycle, n)).unwrap()
    }

    #[test]
    fn c4_is_cactus() {
        assert!(is_cactus(&cycle(4)));
        let s = cactus_stats(&cycle(4)).unwrap();
        assert_eq!((s.cc, s.cy, s.ex), (1, 1, 0));
        assert_eq!(s.order, 3 * s.size / 4 + 1);
    }

    #[test]
    fn k4_is_not_cactus() {
        let k4 = generate(&FamilySpec::one_param(FamilyKind::Complete, 4)).unwrap();
        assert!(!is_cactus(&k4));
        assert!(cactus_stats(&k4).is_err());
    }

    #[test]
    fn two_c4s_sharing_a_vertex() {
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
        )
        .unwrap();
        assert!(is_cactus(&g));
        let s = cactus_stats(&g).unwrap();
        assert_eq!((s.cc, s.cy), (1, 2));
        assert!(tightness_check(&g).unwrap());
    }

    #[test]
    fn tree_stats() {
        let t = generate(&FamilySpec::one_param(FamilyKind::Star, 5)).unwrap();
        let s = cactus_stats(&t).unwrap();
        assert_eq!((s.cc, s.cy, s.ex), (1, 0, 4));
        assert_eq!(s.order, s.size - s.cy + s.cc);
    }

    #[test]
    fn two_disjoint_c4s() {
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        let s = cactus_stats(&g).unwrap();
        assert_eq!((s.cc, s.cy, s.ex), (2, 2, 0));
        assert_eq!(s.order, s.size - s.cy + s.cc);
        assert!(tightness_check(&g).is_err()); // disconnected
    }

    #[test]
    fn c6_fails_tightness() {
        assert!(!tightness_check(&cycle(6)).unwrap());
    }

    #[test]
    fn c4_plus_pendant_fails_tightness() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        assert!(is_cactus(&g));
        assert!(!tightness_check(&g).unwrap());
    }

    #[test]
    fn chain_of_three_c4s_is_tight() {
        let g = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0),
                (3, 4), (4, 5), (5, 6), (6, 3),
                (6, 7), (7, 8), (8, 9), (9, 6),
            ],
        )
        .unwrap();
        assert!(tightness_check(&g).unwrap());
    }

    #[test]
    fn random_cactus_is_cactus() {
        for seed in 0..200 {
            let g = random_cactus(seed, &CactusParams::default());
            assert!(is_cactus(&g), "seed={seed} {g:?}");
            let s = cactus_stats(&g).unwrap();
            assert_eq!(s.order, s.size - s.cy + s.cc, "seed={seed}");
        }
    }

    #[test]
    fn random_bipartite_cactus_is_bipartite() {
        let params = CactusParams {
            bipartite: true,
            ..CactusParams::default()
        };
        for seed in 0..200 {
            let g = random_cactus(seed, &params);
            assert!(is_bipartite(&g), "seed={seed}");
            let s = cactus_stats(&g).unwrap();
            assert!(s.ex >= 0, "seed={seed}");
            // order = (3/4) size + (1/4) ex + cc, scaled by 4
            assert_eq!(4 * s.order as i64, 3 * s.size as i64 + s.ex + 4 * s.cc as i64);
        }
    }
}
