//! Directed graphs with stable per-vertex edge orderings.
//!
//! Every edge has an id (its insertion index). The in- and out-lists of a
//! vertex hold edge ids in insertion order, and that order is what the level
//! subgraphs mean by "the first 2^i incoming edges". Parallel edges are only
//! permitted for graphs built through [`Graph::multigraph`], which the
//! contracted flow graphs use.

use std::collections::HashSet;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(VertexId, VertexId)>,
    out_adj: Vec<Vec<EdgeId>>,
    in_adj: Vec<Vec<EdgeId>>,
    allow_parallel: bool,
}

/// An induced or edge-deleted subgraph together with the ids it came from.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// New vertex id -> id in the parent graph.
    pub vertex_map: Vec<VertexId>,
    /// New edge id -> id in the parent graph.
    pub edge_map: Vec<EdgeId>,
}

impl Subgraph {
    pub fn parent_vertices(&self, vs: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<_> = vs.iter().map(|&v| self.vertex_map[v]).collect();
        out.sort_unstable();
        out
    }
}

impl Graph {
    /// Builds a simple graph. Rejects self-loops and duplicate pairs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(Self::assemble(n, edges, false))
    }

    /// Builds a graph that may carry parallel edges (never self-loops).
    pub fn multigraph(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let edges: Vec<_> = edges.into_iter().collect();
        debug_assert!(edges.iter().all(|&(u, v)| u < n && v < n && u != v));
        Self::assemble(n, edges, true)
    }

    pub fn empty(n: usize) -> Self {
        Self::assemble(n, Vec::new(), false)
    }

    /// Assembles adjacency for edges already known to satisfy the invariants.
    pub(crate) fn assemble(n: usize, edges: Vec<(VertexId, VertexId)>, allow_parallel: bool) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            out_adj[u].push(id);
            in_adj[v].push(id);
        }
        Graph { edges, out_adj, in_adj, allow_parallel }
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn allows_parallel(&self) -> bool {
        self.allow_parallel
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_adj[v]
    }

    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_adj[v]
    }

    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_adj[v].iter().map(move |&e| self.edges[e].1)
    }

    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_adj[v].iter().map(move |&e| self.edges[e].0)
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    pub fn max_in_degree(&self) -> usize {
        self.in_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_out_degree(&self) -> usize {
        self.out_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `min(max in-degree, max out-degree)`; bounds the level loop.
    pub fn degree_bound(&self) -> DegreeBound {
        DegreeBound { gamma: self.max_in_degree().min(self.max_out_degree()) }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (scan, other, fwd) = if self.out_adj[u].len() <= self.in_adj[v].len() {
            (&self.out_adj[u], v, true)
        } else {
            (&self.in_adj[v], u, false)
        };
        scan.iter().any(|&e| {
            let (a, b) = self.edges[e];
            if fwd {
                b == other
            } else {
                a == other
            }
        })
    }

    /// Edge `(u, v)` becomes `(v, u)`; edge ids are kept, so the in-list of
    /// a vertex in the result is its out-list here and vice versa.
    pub fn reverse(&self) -> Graph {
        Graph {
            edges: self.edges.iter().map(|&(u, v)| (v, u)).collect(),
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            allow_parallel: self.allow_parallel,
        }
    }

    /// `G[S]`, re-indexed in the order `s` is given. Relative edge order is kept.
    pub fn induced_subgraph(&self, s: &[VertexId]) -> Subgraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in s.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u], local[v]));
                edge_map.push(id);
            }
        }
        Subgraph {
            graph: Graph::assemble(s.len(), edges, self.allow_parallel),
            vertex_map: s.to_vec(),
            edge_map,
        }
    }

    /// `G \ X` for a vertex set given as a membership mask.
    pub fn without_vertices(&self, removed: &[bool]) -> Subgraph {
        let keep: Vec<VertexId> = (0..self.n()).filter(|&v| !removed[v]).collect();
        self.induced_subgraph(&keep)
    }

    /// `G \ X` for an edge set given as ids; vertex ids are unchanged.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Subgraph {
        let mut gone = vec![false; self.m()];
        for &e in removed {
            gone[e] = true;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (id, &uv) in self.edges.iter().enumerate() {
            if !gone[id] {
                edges.push(uv);
                edge_map.push(id);
            }
        }
        Subgraph {
            graph: Graph::assemble(self.n(), edges, self.allow_parallel),
            vertex_map: (0..self.n()).collect(),
            edge_map,
        }
    }

    /// Sorted edge list, for order-insensitive comparisons.
    pub fn edge_set(&self) -> Vec<(VertexId, VertexId)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Vertices reachable from `root`, optionally skipping a vertex mask and an edge mask.
    pub fn reachable_from(
        &self,
        root: VertexId,
        skip_vertex: Option<&[bool]>,
        skip_edge: Option<&[bool]>,
    ) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        if skip_vertex.is_some_and(|s| s[root]) {
            return seen;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &e in &self.out_adj[u] {
                if skip_edge.is_some_and(|s| s[e]) {
                    continue;
                }
                let w = self.edges[e].1;
                if seen[w] || skip_vertex.is_some_and(|s| s[w]) {
                    continue;
                }
                seen[w] = true;
                stack.push(w);
            }
        }
        seen
    }
}

/// `gamma = min(max in-degree, max out-degree)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    pub gamma: usize,
}

impl DegreeBound {
    /// Whether the level search runs at level `i`, i.e. `2^i < gamma`.
    pub fn admits_level(self, i: usize) -> bool {
        i < usize::BITS as usize - 1 && (1usize << i) < self.gamma
    }

    /// `ceil(log2 gamma)`, the level charged to the whole-graph search.
    pub fn ceil_log(self) -> usize {
        ceil_log2(self.gamma)
    }
}

pub(crate) fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

pub(crate) fn mask(n: usize, members: &[VertexId]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in members {
        m[v] = true;
    }
    m
}
