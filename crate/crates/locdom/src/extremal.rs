//! Bipartite witnesses for the three possible gaps between the
//! location-domination number of a graph and of its complement:
//! subset-family graphs `G(r,s)` where the complement is one higher,
//! bi-stars where it is one lower, and bicliques for equality.

use crate::error::{Error, Result};
use crate::families::{generate, FamilyKind, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::solver::{is_ld_set, lambda, lambda_complement};

/// A bipartite graph whose larger side is a family of distinct nonempty
/// subsets of the smaller side `U = {0..r}`: w-vertex `i` is adjacent
/// exactly to the members of `w_subsets[i]`.
#[derive(Clone, Debug)]
pub struct SubsetFamilyGraph {
    pub r: usize,
    /// Subsets over vertex indices `0..r`, one per W-vertex, in graph order.
    pub w_subsets: Vec<VertexSet>,
    pub graph: Graph,
}

impl SubsetFamilyGraph {
    fn from_subsets(r: usize, w_subsets: Vec<VertexSet>) -> Result<Self> {
        let s = w_subsets.len();
        let mut g = Graph::empty(r + s)?;
        for (i, sub) in w_subsets.iter().enumerate() {
            debug_assert!(!sub.is_empty() && sub.is_subset_of(VertexSet::full(r)));
            for u in sub.iter() {
                g.add_edge(u, r + i)?;
            }
        }
        Ok(SubsetFamilyGraph {
            r,
            w_subsets,
            graph: g,
        })
    }

    pub fn u_side(&self) -> VertexSet {
        VertexSet::full(self.r)
    }

    pub fn s(&self) -> usize {
        self.w_subsets.len()
    }
}

/// Whether a bipartite graph with sides `(r, s)` can have the complement
/// gap `+1`: exactly when `3r/2 + 1 <= s <= 2^r - 1` (exact rational
/// comparison on the left).
pub fn feasibility(r: usize, s: usize) -> bool {
    3 * r + 2 <= 2 * s && (r >= 63 || s <= (1usize << r) - 1)
}

/// Base subset family: the full set, all co-singletons, and a matching
/// of co-pairs; for odd `r` the tail uses two overlapping co-pairs and
/// one co-triple, with the empty set dropped when `r = 3` produces it.
fn base_family(r: usize) -> Vec<VertexSet> {
    let full = VertexSet::full(r);
    let mut fam = vec![full];
    fam.extend((0..r).map(|i| full.without(i)));
    let k = r / 2;
    if r % 2 == 0 {
        fam.extend((0..k).map(|i| full.without(2 * i).without(2 * i + 1)));
    } else {
        fam.extend((0..k.saturating_sub(1)).map(|i| full.without(2 * i).without(2 * i + 1)));
        fam.push(full.without(r - 3).without(r - 2));
        fam.push(full.without(r - 2).without(r - 1));
        fam.push(full.without(r - 3).without(r - 2).without(r - 1));
    }
    fam.retain(|s| !s.is_empty());
    fam.sort_unstable();
    fam.dedup();
    // keep a deterministic construction order: descending cardinality,
    // then descending bit pattern
    fam.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(b.cmp(a)));
    fam
}

fn certify(sfg: &SubsetFamilyGraph) -> bool {
    is_ld_set(&sfg.graph, sfg.u_side())
        && lambda(&sfg.graph).value == sfg.r
        && lambda_complement(&sfg.graph).value == sfg.r + 1
}

/// Builds a bipartite graph with sides `(r, s)` whose complement has
/// location-domination number exactly one higher. Every returned graph
/// is certified by the exact solver; the construction is rejected
/// outside the feasible interval.
pub fn construct_extremal(r: usize, s: usize) -> Result<SubsetFamilyGraph> {
    if r < 3 || s < r {
        return Err(Error::ConstructionRange(format!(
            "requires 3 <= r <= s, got ({r},{s})"
        )));
    }
    if !feasibility(r, s) {
        return Err(Error::ConstructionRange(format!(
            "gap +1 requires 3r/2 + 1 <= s <= 2^r - 1, got ({r},{s})"
        )));
    }
    let mut fam = base_family(r);

    // shrink: drop members from the tail of the construction order,
    // re-certifying each removal
    while fam.len() > s {
        let mut removed = None;
        for idx in (0..fam.len()).rev() {
            let mut candidate = fam.clone();
            candidate.remove(idx);
            let sfg = SubsetFamilyGraph::from_subsets(r, candidate)?;
            if sfg.graph.is_connected() && certify(&sfg) {
                removed = Some(idx);
                break;
            }
        }
        match removed {
            Some(idx) => {
                fam.remove(idx);
            }
            None => {
                return Err(Error::CertificationFailed(format!(
                    "no removable family member keeps certification at ({r},{})",
                    fam.len() - 1
                )))
            }
        }
    }

    // grow: add further distinct nonempty subsets in decreasing
    // cardinality, skipping any that break certification
    if fam.len() < s {
        let mut candidates: Vec<VertexSet> = (1..1u64 << r)
            .map(VertexSet::from_bits)
            .filter(|c| !fam.contains(c))
            .collect();
        candidates.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(b.cmp(a)));
        for c in candidates {
            if fam.len() == s {
                break;
            }
            let mut candidate = fam.clone();
            candidate.push(c);
            let sfg = SubsetFamilyGraph::from_subsets(r, candidate)?;
            if certify(&sfg) {
                fam.push(c);
            }
        }
        if fam.len() < s {
            return Err(Error::CertificationFailed(format!(
                "could not extend the family to size {s} for r = {r}"
            )));
        }
    }

    let sfg = SubsetFamilyGraph::from_subsets(r, fam)?;
    if !sfg.graph.is_connected() || !certify(&sfg) {
        return Err(Error::CertificationFailed(format!(
            "final family for ({r},{s}) failed solver certification: {}",
            crate::graph6::encode(&sfg.graph)
        )));
    }
    Ok(sfg)
}

/// Bi-star witness for the gap `-1` (complement one lower).
pub fn construct_gap_minus(r: usize, s: usize) -> Result<Graph> {
    if !(3 <= r && r <= s) {
        return Err(Error::ConstructionRange(format!(
            "bi-star witness requires 3 <= r <= s, got ({r},{s})"
        )));
    }
    generate(&FamilySpec::two_param(FamilyKind::Bistar, r, s))
}

/// Biclique witness for equality of the two invariants.
pub fn construct_gap_zero(r: usize, s: usize) -> Result<Graph> {
    if !(3 <= r && r <= s) {
        return Err(Error::ConstructionRange(format!(
            "biclique witness requires 3 <= r <= s, got ({r},{s})"
        )));
    }
    generate(&FamilySpec::two_param(FamilyKind::CompleteBipartite, r, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipartite::bipartition;
    use crate::solver::{all_ld_codes, lambda_global};

    #[test]
    fn feasibility_interval() {
        assert!(feasibility(3, 6)); // 5.5 <= 6 <= 7
        assert!(!feasibility(3, 5)); // 5 < 5.5
        assert!(feasibility(3, 7));
        assert!(!feasibility(3, 8)); // 8 > 2^3 - 1
        assert!(!feasibility(4, 16)); // 16 > 2^4 - 1
        assert!(feasibility(4, 7)); // 7 = 3*4/2 + 1
        assert!(!feasibility(4, 6));
    }

    #[test]
    fn extremal_4_7_matches_recipe() {
        let sfg = construct_extremal(4, 7).unwrap();
        assert_eq!(sfg.s(), 7);
        let mut fams: Vec<u64> = sfg.w_subsets.iter().map(|s| s.bits()).collect();
        fams.sort_unstable();
        // {1234, 234, 134, 124, 123, 34, 12} over bits 0..4
        let expect: Vec<u64> = vec![0b1111, 0b1110, 0b1101, 0b1011, 0b0111, 0b1100, 0b0011];
        let mut expect = expect;
        expect.sort_unstable();
        assert_eq!(fams, expect);
        assert_eq!(lambda(&sfg.graph).value, 4);
        assert_eq!(lambda_complement(&sfg.graph).value, 5);
    }

    #[test]
    fn extremal_3_6_certifies() {
        let sfg = construct_extremal(3, 6).unwrap();
        assert_eq!(lambda(&sfg.graph).value, 3);
        assert_eq!(lambda_complement(&sfg.graph).value, 4);
        let b = bipartition(&sfg.graph).unwrap().unwrap();
        assert_eq!((b.r(), b.s()), (3, 6));
    }

    #[test]
    fn extremal_full_power_set() {
        let sfg = construct_extremal(4, 15).unwrap();
        assert_eq!(sfg.s(), 15);
        assert_eq!(lambda(&sfg.graph).value, 4);
        assert_eq!(lambda_complement(&sfg.graph).value, 5);
    }

    #[test]
    fn extremal_rejects_out_of_range() {
        assert!(construct_extremal(3, 5).is_err());
        assert!(construct_extremal(3, 8).is_err());
        assert!(construct_extremal(2, 4).is_err());
    }

    #[test]
    fn u_is_the_unique_code_when_r_lt_s() {
        let sfg = construct_extremal(3, 6).unwrap();
        let codes = all_ld_codes(&sfg.graph);
        assert_eq!(codes, vec![sfg.u_side()]);
    }

    #[test]
    fn bistar_witness_values() {
        let g = construct_gap_minus(3, 3).unwrap();
        assert_eq!(lambda(&g).value, 4);
        assert_eq!(lambda_complement(&g).value, 3);
        assert_eq!(lambda_global(&g).value, 4);
        let g = construct_gap_minus(3, 4).unwrap();
        assert_eq!(lambda(&g).value, 5);
        assert_eq!(lambda_complement(&g).value, 4);
    }

    #[test]
    fn biclique_witness_values() {
        let g = construct_gap_zero(3, 3).unwrap();
        assert_eq!(lambda(&g).value, 4);
        assert_eq!(lambda_complement(&g).value, 4);
        let g = construct_gap_zero(3, 4).unwrap();
        assert_eq!(lambda(&g).value, 5);
        assert_eq!(lambda_complement(&g).value, 5);
    }

    #[test]
    fn witness_range_checks() {
        assert!(construct_gap_minus(2, 5).is_err());
        assert!(construct_gap_zero(4, 3).is_err());
    }
}
