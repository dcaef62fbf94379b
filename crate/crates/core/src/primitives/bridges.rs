//! Strong bridges and strong articulation points.
//!
//! Removing an edge or vertex can only split the SCC that contains it, so
//! both are computed per SCC. Inside a strongly connected graph with root
//! `r`, an edge is a strong bridge iff it dominates its head in `G(r)` or in
//! the reverse flow graph, and a vertex other than `r` is a strong
//! articulation point iff it is a nontrivial dominator in either; `r` is
//! tested directly.

use crate::graph::{EdgeId, Graph, VertexId};
use crate::primitives::dominators::{dominator_pairs, edge_dominators};
use crate::primitives::scc::{is_strongly_connected, scc};

/// Edges whose removal increases the number of SCCs, sorted by `(tail, head)`.
pub fn strong_bridges(g: &Graph) -> Vec<EdgeId> {
    let mut out = Vec::new();
    for comp in scc(g).components.iter().filter(|c| c.len() > 1) {
        let sub = g.induced_subgraph(comp);
        let h = &sub.graph;
        let mut local = edge_dominators(h, 0);
        local.extend(edge_dominators(&h.reverse(), 0));
        local.sort_unstable();
        local.dedup();
        out.extend(local.into_iter().map(|e| sub.edge_map[e]));
    }
    out.sort_unstable_by_key(|&e| g.edge(e));
    out
}

/// Vertices whose removal increases the number of SCCs, sorted.
pub fn strong_articulation_points(g: &Graph) -> Vec<VertexId> {
    let mut out = Vec::new();
    for comp in scc(g).components.iter().filter(|c| c.len() > 2) {
        let sub = g.induced_subgraph(comp);
        let h = &sub.graph;
        let mut local: Vec<VertexId> = dominator_pairs(h, 0).into_iter().map(|(d, _)| d).collect();
        local.extend(dominator_pairs(&h.reverse(), 0).into_iter().map(|(d, _)| d));
        let mut without_root = vec![false; h.n()];
        without_root[0] = true;
        if !is_strongly_connected(&h.without_vertices(&without_root).graph) {
            local.push(0);
        }
        out.extend(local.into_iter().map(|v| sub.vertex_map[v]));
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::gen_random;

    fn scc_count(g: &Graph) -> usize {
        scc(g).len()
    }

    fn bridges_by_removal(g: &Graph) -> Vec<EdgeId> {
        let base = scc_count(g);
        let mut out: Vec<EdgeId> =
            (0..g.m()).filter(|&e| scc_count(&g.without_edges(&[e]).graph) > base).collect();
        out.sort_unstable_by_key(|&e| g.edge(e));
        out
    }

    fn saps_by_removal(g: &Graph) -> Vec<VertexId> {
        let base = scc_count(g);
        (0..g.n())
            .filter(|&v| {
                let mut m = vec![false; g.n()];
                m[v] = true;
                scc_count(&g.without_vertices(&m).graph) > base
            })
            .collect()
    }

    #[test]
    fn two_cycle_bridge_bridges() {
        let g = fixtures::two_cycle_bridge();
        let pairs: Vec<_> = strong_bridges(&g).into_iter().map(|e| g.edge(e)).collect();
        // The chords 2->0 and 5->3 are bypassed by the outer 6-cycle.
        assert_eq!(pairs, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(strong_bridges(&g), bridges_by_removal(&g));
    }

    #[test]
    fn small_fixtures() {
        assert!(strong_bridges(&fixtures::bitri()).is_empty());
        assert_eq!(strong_bridges(&fixtures::c3()).len(), 3);
        assert_eq!(strong_articulation_points(&fixtures::bowtie()), vec![2]);
        assert!(strong_articulation_points(&fixtures::bitri()).is_empty());
        assert!(strong_articulation_points(&fixtures::k4b()).is_empty());
    }

    #[test]
    fn random_agreement_with_removal() {
        for seed in 0..300 {
            let n = 3 + seed as usize % 8;
            let g = gen_random(n, 0.3, seed).unwrap();
            assert_eq!(strong_bridges(&g), bridges_by_removal(&g), "seed {seed}");
            assert_eq!(strong_articulation_points(&g), saps_by_removal(&g), "seed {seed}");
        }
    }
}
