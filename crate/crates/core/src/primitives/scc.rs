//! Strongly connected components (iterative Tarjan) with top/bottom flags.

use crate::graph::{mask, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccPartition {
    pub comp_of: Vec<usize>,
    /// Components ordered by their smallest member; members sorted.
    pub components: Vec<Vec<VertexId>>,
    /// No edge enters the component.
    pub is_top: Vec<bool>,
    /// No edge leaves the component.
    pub is_bottom: Vec<bool>,
}

impl SccPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// First top component (by smallest member) containing no vertex of `excluded`.
    pub fn top_excluding(&self, excluded: Option<&[bool]>) -> Option<&[VertexId]> {
        self.components
            .iter()
            .zip(&self.is_top)
            .find(|(c, &top)| top && !excluded.is_some_and(|b| c.iter().any(|&v| b[v])))
            .map(|(c, _)| c.as_slice())
    }
}

pub fn scc(g: &Graph) -> SccPartition {
    let n = g.n();
    let raw = tarjan(g);
    // Renumber components by smallest member.
    let mut first = vec![usize::MAX; raw.count];
    let mut order = Vec::with_capacity(raw.count);
    for v in 0..n {
        let c = raw.comp[v];
        if first[c] == usize::MAX {
            first[c] = order.len();
            order.push(c);
        }
    }
    let comp_of: Vec<usize> = raw.comp.iter().map(|&c| first[c]).collect();
    let mut components = vec![Vec::new(); raw.count];
    for v in 0..n {
        components[comp_of[v]].push(v);
    }
    let mut is_top = vec![true; raw.count];
    let mut is_bottom = vec![true; raw.count];
    for &(u, v) in g.edges() {
        let (cu, cv) = (comp_of[u], comp_of[v]);
        if cu != cv {
            is_bottom[cu] = false;
            is_top[cv] = false;
        }
    }
    SccPartition { comp_of, components, is_top, is_bottom }
}

struct RawScc {
    comp: Vec<usize>,
    count: usize,
}

fn tarjan(g: &Graph) -> RawScc {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    // (vertex, position in its out-list)
    let mut call: Vec<(VertexId, usize)> = Vec::new();
    let mut next = 0;
    let mut count = 0;

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let outs = g.out_edges(v);
            if *pos < outs.len() {
                let w = g.edge(outs[*pos]).1;
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack holds v");
                    on_stack[w] = false;
                    comp[w] = count;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    RawScc { comp, count }
}

/// Vertex set of a tSCC of `g` avoiding `excluded`, smallest-member tie-break;
/// empty if every tSCC meets `excluded`.
pub fn top_scc_excluding(g: &Graph, excluded: &[VertexId]) -> Vec<VertexId> {
    let b = mask(g.n(), excluded);
    scc(g).top_excluding(Some(&b)).map(<[_]>::to_vec).unwrap_or_default()
}

/// Like [`top_scc_excluding`] with the excluded set given as a mask.
pub fn top_scc_excluding_mask(g: &Graph, excluded: &[bool]) -> Vec<VertexId> {
    scc(g).top_excluding(Some(excluded)).map(<[_]>::to_vec).unwrap_or_default()
}

/// A tSCC of `g` (smallest-member tie-break); empty only for the empty graph.
pub fn top_scc(g: &Graph) -> Vec<VertexId> {
    scc(g).top_excluding(None).map(<[_]>::to_vec).unwrap_or_default()
}

pub fn is_strongly_connected(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let fwd = g.reachable_from(0, None, None);
    if fwd.iter().any(|&r| !r) {
        return false;
    }
    g.reverse().reachable_from(0, None, None).into_iter().all(|r| r)
}
