//! Dominators in flow graphs (Lengauer-Tarjan, simple version).

use crate::graph::{EdgeId, Graph, VertexId};
use crate::level::RootedFlowGraph;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct DominatorTree {
    root: VertexId,
    /// Immediate dominator; `None` for the root and unreachable vertices.
    idom: Vec<Option<VertexId>>,
    reachable: Vec<bool>,
    tin: Vec<usize>,
    tout: Vec<usize>,
}

impl DominatorTree {
    pub fn new(g: &Graph, root: VertexId) -> Self {
        let n = g.n();
        // Preorder DFS from root.
        let mut dfn = vec![NONE; n];
        let mut order = Vec::new();
        let mut parent = Vec::new();
        let mut stack = vec![(root, NONE)];
        while let Some((v, p)) = stack.pop() {
            if dfn[v] != NONE {
                continue;
            }
            dfn[v] = order.len();
            order.push(v);
            parent.push(p);
            for &e in g.out_edges(v).iter().rev() {
                let w = g.edge(e).1;
                if dfn[w] == NONE {
                    stack.push((w, dfn[v]));
                }
            }
        }
        let count = order.len();
        let mut semi: Vec<usize> = (0..count).collect();
        let mut label: Vec<usize> = (0..count).collect();
        let mut ancestor = vec![NONE; count];
        let mut idom = vec![NONE; count];
        let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); count];
        let mut path = Vec::new();

        let mut eval = |v: usize, ancestor: &mut Vec<usize>, label: &mut Vec<usize>, semi: &[usize]| {
            if ancestor[v] == NONE {
                return v;
            }
            path.clear();
            let mut x = v;
            while ancestor[ancestor[x]] != NONE {
                path.push(x);
                x = ancestor[x];
            }
            while let Some(x) = path.pop() {
                let a = ancestor[x];
                if semi[label[a]] < semi[label[x]] {
                    label[x] = label[a];
                }
                ancestor[x] = ancestor[a];
            }
            label[v]
        };

        for w in (1..count).rev() {
            for u in g.predecessors(order[w]) {
                let v = dfn[u];
                if v == NONE {
                    continue;
                }
                let x = eval(v, &mut ancestor, &mut label, &semi);
                if semi[x] < semi[w] {
                    semi[w] = semi[x];
                }
            }
            bucket[semi[w]].push(w);
            let p = parent[w];
            ancestor[w] = p;
            for v in std::mem::take(&mut bucket[p]) {
                let u = eval(v, &mut ancestor, &mut label, &semi);
                idom[v] = if semi[u] < semi[v] { u } else { p };
            }
        }
        for w in 1..count {
            if idom[w] != semi[w] {
                idom[w] = idom[idom[w]];
            }
        }

        let mut out_idom = vec![None; n];
        let mut reachable = vec![false; n];
        let mut children: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for (i, &v) in order.iter().enumerate() {
            reachable[v] = true;
            if i > 0 {
                let d = order[idom[i]];
                out_idom[v] = Some(d);
                children[d].push(v);
            }
        }
        // Entry/exit times on the dominator tree for ancestor queries.
        let mut tin = vec![NONE; n];
        let mut tout = vec![NONE; n];
        if n > 0 {
            let mut clock = 0;
            let mut st = vec![(root, 0usize)];
            tin[root] = clock;
            clock += 1;
            while let Some(&mut (v, ref mut i)) = st.last_mut() {
                if *i < children[v].len() {
                    let c = children[v][*i];
                    *i += 1;
                    tin[c] = clock;
                    clock += 1;
                    st.push((c, 0));
                } else {
                    tout[v] = clock;
                    clock += 1;
                    st.pop();
                }
            }
        }
        DominatorTree { root, idom: out_idom, reachable, tin, tout }
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn idom(&self, v: VertexId) -> Option<VertexId> {
        self.idom[v]
    }

    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.reachable[v]
    }

    /// Whether `a` dominates `b` (reflexive). False if either is unreachable.
    pub fn dominates(&self, a: VertexId, b: VertexId) -> bool {
        self.reachable[a]
            && self.reachable[b]
            && self.tin[a] <= self.tin[b]
            && self.tout[b] <= self.tout[a]
    }
}

/// Non-root vertices that dominate another reachable vertex, each with the
/// smallest vertex it immediately dominates. Sorted by dominator.
pub fn dominator_vertices(fg: &RootedFlowGraph) -> Vec<(VertexId, VertexId)> {
    dominator_pairs(&fg.graph, fg.root)
}

pub(crate) fn dominator_pairs(g: &Graph, root: VertexId) -> Vec<(VertexId, VertexId)> {
    let tree = DominatorTree::new(g, root);
    let mut witness = vec![NONE; g.n()];
    for w in 0..g.n() {
        if let Some(d) = tree.idom(w) {
            if d != root && witness[d] == NONE {
                witness[d] = w;
            }
        }
    }
    witness
        .iter()
        .enumerate()
        .filter(|(_, &w)| w != NONE)
        .map(|(d, &w)| (d, w))
        .collect()
}

/// The lexicographically smallest edge through which some reachable vertex
/// must be reached from the root, if any.
pub fn edge_dominator(fg: &RootedFlowGraph) -> Option<EdgeId> {
    let g = &fg.graph;
    edge_dominators(g, fg.root).into_iter().min_by_key(|&e| g.edge(e))
}

/// Every edge `(u, v)` that dominates `v` in `g(root)`.
///
/// `(u, v)` dominates `v` iff `u = idom(v)`, the pair is not parallel, and
/// `v` dominates every other predecessor of `v`.
pub(crate) fn edge_dominators(g: &Graph, root: VertexId) -> Vec<EdgeId> {
    let tree = DominatorTree::new(g, root);
    let mut out = Vec::new();
    for v in 0..g.n() {
        let Some(u) = tree.idom(v) else { continue };
        let mut from_u = g.in_edges(v).iter().filter(|&&e| g.edge(e).0 == u);
        let (Some(&e), None) = (from_u.next(), from_u.next()) else { continue };
        let others_ok = g
            .predecessors(v)
            .filter(|&w| w != u && tree.is_reachable(w))
            .all(|w| tree.dominates(v, w));
        if others_ok {
            out.push(e);
        }
    }
    out
}
