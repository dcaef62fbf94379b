//! Unit-capacity max-flow capped at a small bound, with min-cut extraction.
//!
//! Vertex capacities use the usual split: vertex `v` becomes `2v` (in) and
//! `2v + 1` (out) joined by a unit arc; graph edges become `u_out -> v_in`
//! with capacity `k` so they are never cut. `s` and `t` are left unsplit.

use std::collections::VecDeque;

use crate::components::Mode;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::primitives::separators::{Separator, SeparatorRole};

pub(crate) struct FlowNet {
    to: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet { to: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    /// Adds arc `a -> b`; the reverse arc of arc `x` is `x ^ 1`.
    fn arc(&mut self, a: usize, b: usize, cap: u32) {
        let id = self.to.len();
        self.to.extend([b, a]);
        self.cap.extend([cap, 0]);
        self.adj[a].push(id);
        self.adj[b].push(id + 1);
    }

    /// Augments along BFS paths until `limit` units are routed or none remain.
    /// Returns the flow value, which is also the number of augmentations.
    fn bounded_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::new();
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            queue.clear();
            queue.push_back(s);
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.adj[x] {
                    let y = self.to[a];
                    if self.cap[a] > 0 && !seen[y] {
                        seen[y] = true;
                        pred[y] = a;
                        if y == t {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while y != s {
                let a = pred[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1];
            }
            flow += 1;
        }
        crate::trace::note_augmentations(flow);
        flow
    }

    fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Result of a capped flow computation between two vertices.
pub(crate) struct CappedFlow {
    pub value: usize,
    /// Min cut (edge ids or vertex ids) when `value` is below the cap.
    pub cut: Option<Vec<usize>>,
}

/// Routes up to `k` units from `s` to `t`. For vertex mode an edge `s -> t`
/// means the pair cannot be separated and the flow is reported as `k`.
pub(crate) fn capped_flow(g: &Graph, s: VertexId, t: VertexId, k: usize, mode: Mode) -> CappedFlow {
    debug_assert_ne!(s, t);
    match mode {
        Mode::Edge => {
            let mut net = FlowNet::new(g.n());
            for &(u, v) in g.edges() {
                net.arc(u, v, 1);
            }
            let value = net.bounded_flow(s, t, k);
            if value >= k {
                return CappedFlow { value, cut: None };
            }
            let reach = net.residual_reach(s);
            let cut: Vec<EdgeId> = (0..g.m())
                .filter(|&e| {
                    let (u, v) = g.edge(e);
                    reach[u] && !reach[v]
                })
                .collect();
            CappedFlow { value, cut: Some(cut) }
        }
        Mode::Vertex => {
            if g.has_edge(s, t) {
                return CappedFlow { value: k, cut: None };
            }
            let n = g.n();
            let mut net = FlowNet::new(2 * n);
            let big = k as u32;
            for v in 0..n {
                let c = if v == s || v == t { big } else { 1 };
                net.arc(2 * v, 2 * v + 1, c);
            }
            for &(u, v) in g.edges() {
                net.arc(2 * u + 1, 2 * v, big);
            }
            let value = net.bounded_flow(2 * s + 1, 2 * t, k);
            if value >= k {
                return CappedFlow { value, cut: None };
            }
            let reach = net.residual_reach(2 * s + 1);
            let cut: Vec<VertexId> = (0..n)
                .filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1])
                .collect();
            CappedFlow { value, cut: Some(cut) }
        }
    }
}

/// Minimum `s -> t` separator of fewer than `k` edges or vertices, if one exists.
pub fn bounded_min_separator(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    k: usize,
    mode: Mode,
) -> Option<Separator> {
    capped_flow(g, s, t, k, mode)
        .cut
        .map(|members| Separator::new(mode, SeparatorRole::KSeparator, members))
}

/// Number of edge- or internally vertex-disjoint `s -> t` paths, capped at `k`.
pub fn disjoint_paths(g: &Graph, s: VertexId, t: VertexId, k: usize, mode: Mode) -> usize {
    capped_flow(g, s, t, k, mode).value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::gen_random;

    fn separates(g: &Graph, s: VertexId, t: VertexId, sep: &Separator) -> bool {
        let r = match sep.mode() {
            Mode::Edge => {
                let mut skip = vec![false; g.m()];
                sep.members().iter().for_each(|&e| skip[e] = true);
                g.reachable_from(s, None, Some(&skip))
            }
            Mode::Vertex => {
                let mut skip = vec![false; g.n()];
                sep.members().iter().for_each(|&v| skip[v] = true);
                g.reachable_from(s, Some(&skip), None)
            }
        };
        !r[t]
    }

    #[test]
    fn c3_edge_cut() {
        let g = fixtures::c3();
        let sep = bounded_min_separator(&g, 0, 2, 2, Mode::Edge).unwrap();
        assert_eq!(sep.len(), 1);
        assert!(matches!(g.edge(sep.members()[0]), (0, 1) | (1, 2)));
        assert!(separates(&g, 0, 2, &sep));
    }

    #[test]
    fn k4b_vertex_three_paths() {
        // Adjacent pair: inseparable.
        assert!(bounded_min_separator(&fixtures::k4b(), 0, 3, 3, Mode::Vertex).is_none());
    }

    #[test]
    fn bowtie_vertex_cut() {
        let g = fixtures::bowtie();
        let sep = bounded_min_separator(&g, 0, 4, 2, Mode::Vertex).unwrap();
        assert_eq!(sep.members(), &[2]);
    }

    #[test]
    fn menger_consistency() {
        for seed in 0..200 {
            let g = gen_random(7, 0.35, seed).unwrap();
            for (s, t) in [(0, 6), (3, 1), (5, 2)] {
                for mode in [Mode::Edge, Mode::Vertex] {
                    for k in 1..=3 {
                        let f = capped_flow(&g, s, t, k, mode);
                        match f.cut {
                            None => assert!(f.value >= k),
                            Some(cut) => {
                                assert_eq!(cut.len(), f.value, "seed {seed}");
                                let sep = Separator::new(mode, SeparatorRole::KSeparator, cut);
                                assert!(separates(&g, s, t, &sep), "seed {seed}");
                            }
                        }
                    }
                }
            }
        }
    }
}
