//! Degree-3 expansion preserving 2-edge strongly connected components.
//!
//! A vertex `v` with `d = max(in, out) > 3` becomes `d` vertices
//! `v_0 .. v_{d-1}` joined by a directed cycle in each direction. The i-th
//! out-edge of `u` and the j-th in-edge of `v` meet as `(u_{i-1}, v_{j-1})`,
//! so every expanded vertex carries at most one original edge each way.

use crate::components::ComponentSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMapping {
    /// Original vertex -> its expanded vertices.
    pub forward: Vec<Vec<VertexId>>,
    /// Expanded vertex -> original vertex.
    pub backward: Vec<VertexId>,
}

impl VertexMapping {
    pub fn identity(n: usize) -> Self {
        VertexMapping { forward: (0..n).map(|v| vec![v]).collect(), backward: (0..n).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.backward.iter().enumerate().all(|(i, &v)| i == v) && self.forward.len() == self.backward.len()
    }
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.in_degree(v).max(g.out_degree(v))).max().unwrap_or(0)
}

pub fn constant_degree_transform(g: &Graph) -> (Graph, VertexMapping) {
    let n = g.n();
    let mut forward = Vec::with_capacity(n);
    let mut backward = Vec::new();
    for v in 0..n {
        let d = g.in_degree(v).max(g.out_degree(v));
        let count = if d > 3 { d } else { 1 };
        let first = backward.len();
        forward.push((first..first + count).collect::<Vec<_>>());
        backward.extend(std::iter::repeat_n(v, count));
    }
    // Position of each edge in its tail's out-list and head's in-list.
    let mut out_pos = vec![0; g.m()];
    let mut in_pos = vec![0; g.m()];
    for v in 0..n {
        for (i, &e) in g.out_edges(v).iter().enumerate() {
            out_pos[e] = i;
        }
        for (j, &e) in g.in_edges(v).iter().enumerate() {
            in_pos[e] = j;
        }
    }
    let slot = |v: VertexId, i: usize| {
        let f = &forward[v];
        if f.len() == 1 {
            f[0]
        } else {
            f[i]
        }
    };
    let mut edges: Vec<(VertexId, VertexId)> =
        g.edges().iter().enumerate().map(|(e, &(u, v))| (slot(u, out_pos[e]), slot(v, in_pos[e]))).collect();
    for f in forward.iter().filter(|f| f.len() > 1) {
        let d = f.len();
        for t in 0..d {
            edges.push((f[t], f[(t + 1) % d]));
        }
        for t in 0..d {
            edges.push((f[(t + 1) % d], f[t]));
        }
    }
    let expanded = Graph::assemble(backward.len(), edges, false);
    (expanded, VertexMapping { forward, backward })
}

/// Maps components of the expanded graph back to original vertices.
pub fn project_components(map: &VertexMapping, comps: &ComponentSet, original: &Graph) -> Result<ComponentSet> {
    let mut comp_of = vec![usize::MAX; map.backward.len()];
    for (i, c) in comps.components.iter().enumerate() {
        for &x in &c.vertices {
            comp_of[x] = i;
        }
    }
    let mut sets = Vec::with_capacity(comps.len());
    for c in &comps.components {
        let mut set: Vec<VertexId> = c.vertices.iter().map(|&x| map.backward[x]).collect();
        set.sort_unstable();
        set.dedup();
        for &v in &set {
            let own = comp_of[map.forward[v][0]];
            if map.forward[v].iter().any(|&x| comp_of[x] != own) {
                return Err(Error::SplitExpansion(v));
            }
        }
        sets.push(set);
    }
    Ok(ComponentSet::from_vertex_sets(original, comps.k, comps.mode, sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::Mode;
    use crate::fixtures;

    #[test]
    fn c3_unchanged() {
        let g = fixtures::c3();
        let (h, map) = constant_degree_transform(&g);
        assert_eq!(h, g);
        assert!(map.is_identity());
    }

    #[test]
    fn bowtie_expands_center() {
        let g = fixtures::bowtie();
        let (h, map) = constant_degree_transform(&g);
        assert_eq!(h.n(), 8);
        assert_eq!(map.forward[2], vec![2, 3, 4, 5]);
        assert_eq!(map.backward, vec![0, 1, 2, 2, 2, 2, 3, 4]);
        assert!(max_degree(&h) <= 3);
        assert_eq!(h.m(), g.m() + 8);
        // Each expanded vertex of 2 carries exactly one original edge each way.
        for x in 2..6 {
            assert_eq!((h.in_degree(x), h.out_degree(x)), (3, 3));
        }
    }

    #[test]
    fn identity_projection() {
        let g = fixtures::path(3);
        let cs = ComponentSet::from_vertex_sets(&g, 2, Mode::Edge, vec![vec![0], vec![1], vec![2]]);
        let map = VertexMapping::identity(3);
        assert_eq!(project_components(&map, &cs, &g).unwrap(), cs);
    }

    #[test]
    fn split_expansion_rejected() {
        let g = fixtures::bowtie();
        let (h, map) = constant_degree_transform(&g);
        let singles: Vec<Vec<usize>> = (0..h.n()).map(|x| vec![x]).collect();
        let cs = ComponentSet::from_vertex_sets(&h, 2, Mode::Edge, singles);
        assert_eq!(project_components(&map, &cs, &g), Err(Error::SplitExpansion(2)));
        let merged = ComponentSet::from_vertex_sets(
            &h,
            2,
            Mode::Edge,
            vec![vec![0], vec![1], vec![2, 3, 4, 5], vec![6], vec![7]],
        );
        let p = project_components(&map, &merged, &g).unwrap();
        assert_eq!(p.vertex_sets(), vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
    }
}
