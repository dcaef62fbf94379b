//! Slow reference algorithms: the plain recursion without level searches,
//! subset enumeration straight from the definition, and pairwise queries.

use crate::components::{ComponentSet, Mode};
use crate::error::{Error, Result};
use crate::graph::{mask, Graph, VertexId};
use crate::hierarchical::k_isolated_set;
use crate::primitives::flow::disjoint_paths;
use crate::primitives::scc::is_strongly_connected;
use crate::primitives::separators::{check_order, for_each_subset};

/// Largest inputs accepted by [`brute_force_kscc`].
pub const BRUTE_FORCE_MAX_EDGE: usize = 12;
pub const BRUTE_FORCE_MAX_VERTEX: usize = 10;

/// Splits along whole-graph isolated sets until none is left.
pub fn naive_kscc(g: &Graph, k: usize, mode: Mode) -> Result<ComponentSet> {
    check_order(k)?;
    Ok(ComponentSet::from_vertex_sets(g, k, mode, naive_sets(g, k, mode)))
}

/// Raw (not normalized) vertex sets of the naive recursion. `k >= 2`.
pub(crate) fn naive_sets(g: &Graph, k: usize, mode: Mode) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<VertexId>> = vec![(0..g.n()).collect()];
    while let Some(set) = stack.pop() {
        let sub = g.induced_subgraph(&set);
        let res = k_isolated_set(&sub.graph, k, mode).expect("order checked by caller");
        let Some(res) = res else {
            out.push(set);
            continue;
        };
        let in_s = mask(set.len(), &res.s);
        let rest: Vec<VertexId> = (0..set.len()).filter(|&v| !in_s[v]).map(|v| set[v]).collect();
        let mut inside = res.s.clone();
        if mode == Mode::Vertex {
            inside.extend(&res.z);
            inside.sort_unstable();
        }
        stack.push(rest);
        stack.push(inside.into_iter().map(|v| set[v]).collect());
    }
    out
}

/// Maximal vertex sets whose induced subgraph is pairwise k-connected,
/// found by enumerating all subsets.
pub fn brute_force_kscc(g: &Graph, k: usize, mode: Mode) -> Result<ComponentSet> {
    check_order(k)?;
    let n = g.n();
    let max = match mode {
        Mode::Edge => BRUTE_FORCE_MAX_EDGE,
        Mode::Vertex => BRUTE_FORCE_MAX_VERTEX,
    };
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    let all: Vec<VertexId> = (0..n).collect();
    let mut kept: Vec<Vec<VertexId>> = Vec::new();
    for size in (1..=n).rev() {
        for_each_subset(&all, size, &mut |s| {
            let covered = kept.iter().any(|big| s.iter().all(|v| big.contains(v)));
            if !covered && qualifies(g, s, k, mode) {
                kept.push(s.to_vec());
            }
            false
        });
    }
    Ok(ComponentSet::from_vertex_sets(g, k, mode, kept))
}

fn qualifies(g: &Graph, s: &[VertexId], k: usize, mode: Mode) -> bool {
    let h = g.induced_subgraph(s).graph;
    if !is_strongly_connected(&h) {
        return false;
    }
    (0..h.n()).all(|u| (u + 1..h.n()).all(|v| pairwise_k_connected(&h, u, v, k, mode)))
}

/// Whether `u` and `v` stay strongly connected after removing any fewer
/// than `k` edges (edge mode) or vertices other than `u`, `v` (vertex mode).
///
/// Each direction is decided by a capped flow; in vertex mode a direct edge
/// settles its direction since no vertex removal can break it.
pub fn pairwise_k_connected(g: &Graph, u: VertexId, v: VertexId, k: usize, mode: Mode) -> bool {
    debug_assert_ne!(u, v);
    disjoint_paths(g, u, v, k, mode) >= k && disjoint_paths(g, v, u, k, mode) >= k
}

/// [`pairwise_k_connected`] by trying every removal set of size below `k`.
pub fn pairwise_k_connected_by_removal(g: &Graph, u: VertexId, v: VertexId, k: usize, mode: Mode) -> bool {
    let items: Vec<usize> = match mode {
        Mode::Edge => (0..g.m()).collect(),
        Mode::Vertex => (0..g.n()).filter(|&x| x != u && x != v).collect(),
    };
    let mut ok = true;
    for size in 0..k.min(items.len() + 1) {
        for_each_subset(&items, size, &mut |removed| {
            let (skip_v, skip_e) = match mode {
                Mode::Edge => (None, Some(mask(g.m(), removed))),
                Mode::Vertex => (Some(mask(g.n(), removed)), None),
            };
            let from_u = g.reachable_from(u, skip_v.as_deref(), skip_e.as_deref());
            let from_v = g.reachable_from(v, skip_v.as_deref(), skip_e.as_deref());
            ok = from_u[v] && from_v[u];
            !ok
        });
        if !ok {
            break;
        }
    }
    ok
}
