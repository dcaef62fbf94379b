//! Level subgraphs and the rooted flow graphs built from their blue vertices.
//!
//! The level-`i` subgraph keeps the first `2^i` incoming edges of every
//! vertex (in the fixed per-vertex order). Vertices that lost incoming edges
//! are blue; all others are white and keep their full in-neighbourhood.

use serde::Serialize;

use crate::components::Mode;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Which of `G` and its reverse a search runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Reverse,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::Forward, Direction::Reverse];
}

#[derive(Clone, Debug)]
pub struct LevelSubgraph {
    pub level: usize,
    pub direction: Direction,
    /// `G_i` oriented like the searched graph (reversed for [`Direction::Reverse`]).
    pub graph: Graph,
    pub blue: Vec<bool>,
    /// Level edge id -> edge id in the base graph.
    pub base_edge: Vec<EdgeId>,
}

/// Edges kept per vertex at level `i`.
pub(crate) fn level_cap(i: usize) -> usize {
    1usize.checked_shl(i as u32).unwrap_or(usize::MAX)
}

impl LevelSubgraph {
    pub(crate) fn from_parts(
        level: usize,
        direction: Direction,
        n: usize,
        edges: Vec<(VertexId, VertexId)>,
        base_edge: Vec<EdgeId>,
        blue: Vec<bool>,
    ) -> Self {
        LevelSubgraph { level, direction, graph: Graph::assemble(n, edges, false), blue, base_edge }
    }

    pub fn blue_vertices(&self) -> Vec<VertexId> {
        (0..self.blue.len()).filter(|&v| self.blue[v]).collect()
    }

    pub fn white_vertices(&self) -> Vec<VertexId> {
        (0..self.blue.len()).filter(|&v| !self.blue[v]).collect()
    }

    pub fn has_blue(&self) -> bool {
        self.blue.iter().any(|&b| b)
    }

    pub fn blue_count(&self) -> usize {
        self.blue.iter().filter(|&&b| b).count()
    }
}

/// `G_i` (or `G^R_i`): the first `2^i` in-edges of every vertex.
pub fn level_subgraph(g: &Graph, i: usize, direction: Direction) -> Result<LevelSubgraph> {
    if i == 0 {
        return Err(Error::LevelOutOfRange { level: 0, gamma: g.degree_bound().gamma });
    }
    let cap = level_cap(i);
    let n = g.n();
    let mut edges = Vec::new();
    let mut base_edge = Vec::new();
    let mut blue = vec![false; n];
    for v in 0..n {
        let list = match direction {
            Direction::Forward => g.in_edges(v),
            Direction::Reverse => g.out_edges(v),
        };
        blue[v] = list.len() > cap;
        for &e in list.iter().take(cap) {
            let (a, b) = g.edge(e);
            let tail = if direction == Direction::Forward { a } else { b };
            edges.push((tail, v));
            base_edge.push(e);
        }
    }
    Ok(LevelSubgraph::from_parts(i, direction, n, edges, base_edge, blue))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootKind {
    /// Fresh root with an edge to every blue vertex.
    ArtificialRoot,
    /// Blue vertices merged into the root; parallel edges kept.
    ContractedRoot,
    /// A blue vertex is the root, with edges to the other blue vertices.
    BlueMemberRoot,
    /// An ordinary graph with a chosen root.
    PlainRoot,
}

#[derive(Clone, Debug)]
pub struct RootedFlowGraph {
    pub graph: Graph,
    pub root: VertexId,
    pub kind: RootKind,
    pub origin_blue: Vec<VertexId>,
    /// Flow-graph vertex -> vertex of the source graph (`None` for added roots).
    pub vertex_origin: Vec<Option<VertexId>>,
    /// Flow-graph edge -> edge of the source graph (`None` for added edges).
    pub edge_origin: Vec<Option<EdgeId>>,
}

impl RootedFlowGraph {
    pub fn new(graph: Graph, root: VertexId) -> Self {
        let vertex_origin = (0..graph.n()).map(Some).collect();
        let edge_origin = (0..graph.m()).map(Some).collect();
        RootedFlowGraph {
            graph,
            root,
            kind: RootKind::PlainRoot,
            origin_blue: Vec::new(),
            vertex_origin,
            edge_origin,
        }
    }

    /// Vertices reachable from the root.
    pub fn reachable(&self) -> Vec<bool> {
        self.graph.reachable_from(self.root, None, None)
    }
}

/// The flow graph(s) searched for k-dominators at a level.
pub fn make_flow_graphs(ls: &LevelSubgraph, k: usize, mode: Mode) -> Result<Vec<RootedFlowGraph>> {
    if !ls.has_blue() {
        return Err(Error::EmptyBlueSet);
    }
    Ok(flow_graphs(&ls.graph, &ls.blue, k, mode))
}

pub(crate) fn flow_graphs(g: &Graph, blue: &[bool], k: usize, mode: Mode) -> Vec<RootedFlowGraph> {
    let blues: Vec<VertexId> = (0..g.n()).filter(|&v| blue[v]).collect();
    match mode {
        Mode::Edge => vec![contracted(g, blue)],
        Mode::Vertex if blues.len() >= k => {
            let n = g.n();
            let mut edges = g.edges().to_vec();
            let mut edge_origin: Vec<Option<EdgeId>> = (0..g.m()).map(Some).collect();
            for &b in &blues {
                edges.push((n, b));
                edge_origin.push(None);
            }
            let mut vertex_origin: Vec<Option<VertexId>> = (0..n).map(Some).collect();
            vertex_origin.push(None);
            vec![RootedFlowGraph {
                graph: Graph::assemble(n + 1, edges, g.allows_parallel()),
                root: n,
                kind: RootKind::ArtificialRoot,
                origin_blue: blues,
                vertex_origin,
                edge_origin,
            }]
        }
        Mode::Vertex => blues
            .iter()
            .map(|&w| {
                let mut edges = g.edges().to_vec();
                let mut edge_origin: Vec<Option<EdgeId>> = (0..g.m()).map(Some).collect();
                for &b in blues.iter().filter(|&&b| b != w) {
                    edges.push((w, b));
                    edge_origin.push(None);
                }
                RootedFlowGraph {
                    graph: Graph::assemble(g.n(), edges, true),
                    root: w,
                    kind: RootKind::BlueMemberRoot,
                    origin_blue: blues.clone(),
                    vertex_origin: (0..g.n()).map(Some).collect(),
                    edge_origin,
                }
            })
            .collect(),
    }
}

/// Blue vertices contracted into a root placed after the white vertices.
/// Edges between blue vertices disappear; other edges touching blue
/// vertices are redirected to the root, so parallel edges can appear.
pub(crate) fn contracted(g: &Graph, blue: &[bool]) -> RootedFlowGraph {
    let mut local = vec![usize::MAX; g.n()];
    let mut vertex_origin = Vec::new();
    for v in (0..g.n()).filter(|&v| !blue[v]) {
        local[v] = vertex_origin.len();
        vertex_origin.push(Some(v));
    }
    let root = vertex_origin.len();
    vertex_origin.push(None);
    let at = |v: VertexId| if blue[v] { root } else { local[v] };
    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if blue[u] && blue[v] {
            continue;
        }
        edges.push((at(u), at(v)));
        edge_origin.push(Some(e));
    }
    RootedFlowGraph {
        graph: Graph::assemble(root + 1, edges, true),
        root,
        kind: RootKind::ContractedRoot,
        origin_blue: (0..g.n()).filter(|&v| blue[v]).collect(),
        vertex_origin,
        edge_origin,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::gen_random;

    #[test]
    fn bitri_level_one() {
        let ls = level_subgraph(&fixtures::bitri(), 1, Direction::Forward).unwrap();
        assert_eq!(ls.graph.m(), 6);
        assert!(!ls.has_blue());
    }

    #[test]
    fn k4b_all_blue() {
        let ls = level_subgraph(&fixtures::k4b(), 1, Direction::Forward).unwrap();
        assert_eq!(ls.blue_vertices(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn bowtie_level_one() {
        let ls = level_subgraph(&fixtures::bowtie(), 1, Direction::Forward).unwrap();
        assert_eq!(ls.blue_vertices(), vec![2]);
        assert_eq!(ls.graph.in_degree(2), 2);
        // The first two in-edges of 2 in insertion order come from 0 and 1.
        let tails: Vec<_> = ls.graph.predecessors(2).collect();
        assert_eq!(tails, vec![0, 1]);
    }

    #[test]
    fn level_zero_rejected() {
        assert!(level_subgraph(&fixtures::c3(), 0, Direction::Forward).is_err());
    }

    #[test]
    fn white_vertices_keep_in_edges() {
        for seed in 0..50 {
            let g = gen_random(12, 0.4, seed).unwrap();
            for dir in Direction::BOTH {
                let oriented = match dir {
                    Direction::Forward => g.clone(),
                    Direction::Reverse => g.reverse(),
                };
                for i in 1..5 {
                    let ls = level_subgraph(&g, i, dir).unwrap();
                    assert!(ls.graph.m() <= g.n() << i);
                    for v in 0..g.n() {
                        assert!(ls.graph.in_degree(v) <= 1 << i);
                        assert_eq!(ls.blue[v], oriented.in_degree(v) > 1 << i);
                        if !ls.blue[v] {
                            let mut a: Vec<_> = ls.graph.predecessors(v).collect();
                            let mut b: Vec<_> = oriented.predecessors(v).collect();
                            a.sort_unstable();
                            b.sort_unstable();
                            assert_eq!(a, b);
                        }
                    }
                    for (le, &be) in ls.base_edge.iter().enumerate() {
                        assert_eq!(ls.graph.edge(le), oriented.edge(be));
                    }
                }
                let top = crate::graph::ceil_log2(g.max_in_degree().max(1)).max(1);
                let ls = level_subgraph(&g, top, Direction::Forward).unwrap();
                assert!(!ls.has_blue());
                assert_eq!(ls.graph.m(), g.m());
            }
        }
    }

    #[test]
    fn flow_graph_shapes() {
        let ls = level_subgraph(&fixtures::bowtie(), 1, Direction::Forward).unwrap();
        let fgs = make_flow_graphs(&ls, 2, Mode::Vertex).unwrap();
        assert_eq!(fgs.len(), 1);
        assert_eq!(fgs[0].root, 2);
        assert_eq!(fgs[0].graph.m(), ls.graph.m());

        // Two blue vertices a = 0, b = 1 in a 4-vertex graph, edge mode.
        let g = Graph::new(4, [(0, 2), (1, 2), (2, 3), (3, 0), (3, 1), (0, 1)]).unwrap();
        let blue = vec![true, true, false, false];
        let fg = contracted(&g, &blue);
        assert_eq!(fg.graph.n(), 3);
        assert_eq!(fg.root, 2);
        // 0->2 and 1->2 become parallel root->white edges; 0->1 vanishes.
        assert_eq!(fg.graph.out_degree(fg.root), 2);
        assert_eq!(fg.graph.in_degree(fg.root), 2);
        assert_eq!(fg.graph.m(), 5);

        let blue3 = vec![true, true, true, false];
        let fgs = flow_graphs(&g, &blue3, 2, Mode::Vertex);
        assert_eq!(fgs.len(), 1);
        let fg = &fgs[0];
        assert_eq!(fg.kind, RootKind::ArtificialRoot);
        assert_eq!(fg.graph.successors(fg.root).collect::<Vec<_>>(), vec![0, 1, 2]);

        let fgs = flow_graphs(&g, &blue, 3, Mode::Vertex);
        assert_eq!(fgs.len(), 2);
        assert_eq!(fgs[1].root, 1);
        assert_eq!(fgs[1].graph.m(), g.m() + 1);
        assert!(make_flow_graphs(&level_subgraph(&fixtures::bitri(), 1, Direction::Forward).unwrap(), 2, Mode::Edge).is_err());
    }
}
