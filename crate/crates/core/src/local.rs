//! 2-edge strongly connected components by repeated bridge deletion and
//! depth-bounded local searches, on a graph of maximum degree 3.

use serde::Serialize;

use crate::components::{ComponentSet, Mode};
use crate::error::{Error, Result};
use crate::graph::{ceil_log2, mask, Graph, VertexId};
use crate::hierarchical::{check_isolation, IsolationResult};
use crate::level::{contracted, Direction};
use crate::primitives::dominators::edge_dominators;
use crate::primitives::scc::{scc, top_scc, top_scc_excluding_mask};
use crate::primitives::strong_bridges;
use crate::trace::{LocalBranch, Provenance, TraceEvent, WorkCounters};
use crate::transform::{constant_degree_transform, max_degree, project_components};

#[derive(Clone, Copy, Debug)]
pub struct SparseConfig {
    /// Ball radius is `ceil(epsilon * log2 n)`; must lie in (0, 1).
    pub epsilon: f64,
    /// Re-check every set found by a local search.
    pub verify: bool,
    pub trace: bool,
}

impl Default for SparseConfig {
    fn default() -> Self {
        SparseConfig { epsilon: 0.5, verify: false, trace: false }
    }
}

/// A local-search result that failed its re-check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalViolation {
    pub j: VertexId,
    pub s: Vec<VertexId>,
}

#[derive(Clone, Debug)]
pub struct SparseRun {
    pub components: ComponentSet,
    pub counters: WorkCounters,
    pub trace: Vec<TraceEvent>,
    pub violations: Vec<LocalViolation>,
    /// Outer iterations until no edge was deleted.
    pub iterations: usize,
}

/// 2-edge strongly connected components of `g`.
pub fn two_escc_sparse(g: &Graph) -> ComponentSet {
    two_escc_sparse_with(g, &SparseConfig::default()).expect("default epsilon is valid").components
}

pub fn two_escc_sparse_with(g: &Graph, config: &SparseConfig) -> Result<SparseRun> {
    if !(config.epsilon > 0.0 && config.epsilon < 1.0) {
        return Err(Error::InvalidEpsilon(config.epsilon));
    }
    let (h, map) = constant_degree_transform(g);
    let n = h.n();
    let q = ceil_log2(n);
    let d = ((config.epsilon * (n.max(1) as f64).log2()).ceil() as usize).max(1);
    let mut st = State {
        g: &h,
        alive: vec![true; h.m()],
        counters: WorkCounters::default(),
        trace: Vec::new(),
        violations: Vec::new(),
        config: *config,
    };
    let mut iterations = 0;
    loop {
        iterations += 1;
        let (live, edge_map) = st.live_graph();
        let p = scc(&live);
        for (e, &(u, v)) in live.edges().iter().enumerate() {
            if p.comp_of[u] != p.comp_of[v] {
                st.alive[edge_map[e]] = false;
            }
        }
        let mut j = JSet::new(n);
        let bridges = strong_bridges(&live);
        for &e in &bridges {
            let orig = edge_map[e];
            st.alive[orig] = false;
            let (u, v) = h.edge(orig);
            j.insert(u);
            j.insert(v);
        }
        st.note(TraceEvent::Outer { iteration: iterations, j: j.len(), bridges: bridges.len() });
        if j.is_empty() {
            break;
        }
        while !j.is_empty() && j.len() < q {
            let Some(hit) = st.search(&j.order, d) else { break };
            st.counters.splits += 1;
            let in_s = mask(n, &hit.s);
            let mut removed = false;
            for (e, &(u, v)) in h.edges().iter().enumerate() {
                if st.alive[e] && in_s[u] != in_s[v] {
                    st.alive[e] = false;
                    removed = true;
                    j.insert(u);
                    j.insert(v);
                }
            }
            if !removed {
                break;
            }
        }
    }
    let (live, _) = st.live_graph();
    let sets = scc(&live).components;
    let comps = ComponentSet::from_vertex_sets(&h, 2, Mode::Edge, sets);
    let components = project_components(&map, &comps, g)?;
    Ok(SparseRun { components, counters: st.counters, trace: st.trace, violations: st.violations, iterations })
}

/// Vertices with a path of at most `d` edges to `j` (in `g` for
/// [`Direction::Forward`], in the reverse of `g` otherwise), sorted.
pub fn bounded_reverse_bfs(g: &Graph, j: VertexId, d: usize, direction: Direction) -> Vec<VertexId> {
    let alive = vec![true; g.m()];
    let mut ball = ball(g, &alive, j, d, direction, &mut 0);
    ball.sort_unstable();
    ball
}

/// One local search round over `j_set` on a graph of maximum degree 3.
pub fn two_isolated_set_local(g: &Graph, j_set: &[VertexId], d: usize) -> Result<Vec<VertexId>> {
    check_degree(g)?;
    let mut st = State {
        g,
        alive: vec![true; g.m()],
        counters: WorkCounters::default(),
        trace: Vec::new(),
        violations: Vec::new(),
        config: SparseConfig::default(),
    };
    Ok(st.search(j_set, d).map(|hit| hit.s).unwrap_or_default())
}

/// Like [`two_isolated_set_local`], also naming the branch that fired.
pub fn two_isolated_set_local_traced(
    g: &Graph,
    j_set: &[VertexId],
    d: usize,
) -> Result<(Vec<VertexId>, Vec<TraceEvent>)> {
    check_degree(g)?;
    let mut st = State {
        g,
        alive: vec![true; g.m()],
        counters: WorkCounters::default(),
        trace: Vec::new(),
        violations: Vec::new(),
        config: SparseConfig { trace: true, ..SparseConfig::default() },
    };
    let s = st.search(j_set, d).map(|hit| hit.s).unwrap_or_default();
    Ok((s, st.trace))
}

fn check_degree(g: &Graph) -> Result<()> {
    if max_degree(g) <= 3 {
        return Ok(());
    }
    let vertex = (0..g.n()).find(|&v| g.in_degree(v).max(g.out_degree(v)) > 3).expect("some vertex exceeds");
    Err(Error::DegreeBound { vertex, degree: g.in_degree(vertex).max(g.out_degree(vertex)) })
}

/// Deduplicated vertex set that remembers insertion order.
struct JSet {
    order: Vec<VertexId>,
    member: Vec<bool>,
}

impl JSet {
    fn new(n: usize) -> Self {
        JSet { order: Vec::new(), member: vec![false; n] }
    }

    fn insert(&mut self, v: VertexId) {
        if !self.member[v] {
            self.member[v] = true;
            self.order.push(v);
        }
    }

    fn len(&self) -> usize {
        self.order.len()
    }

    fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

struct Hit {
    s: Vec<VertexId>,
}

struct State<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    counters: WorkCounters,
    trace: Vec<TraceEvent>,
    violations: Vec<LocalViolation>,
    config: SparseConfig,
}

impl State<'_> {
    fn note(&mut self, event: TraceEvent) {
        if self.config.trace {
            self.trace.push(event);
        }
    }

    /// The graph of live edges and its edge -> input edge map.
    fn live_graph(&self) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = (0..self.g.m()).filter(|&e| self.alive[e]).collect();
        let edges = map.iter().map(|&e| self.g.edge(e)).collect();
        (Graph::assemble(self.g.n(), edges, false), map)
    }

    fn search(&mut self, j_set: &[VertexId], d: usize) -> Option<Hit> {
        for &j in j_set {
            for direction in Direction::BOTH {
                if let Some((s, branch, ball_size)) = self.search_one(j, d, direction) {
                    self.note(TraceEvent::Local { j, ball: ball_size, branch, s: s.len() });
                    if self.config.verify {
                        self.verify(j, &s, direction);
                    }
                    return Some(Hit { s });
                }
            }
        }
        None
    }

    fn search_one(&mut self, j: VertexId, d: usize, direction: Direction) -> Option<(Vec<VertexId>, LocalBranch, usize)> {
        let g = self.g;
        let mut scanned = 0u64;
        let x = ball(g, &self.alive, j, d, direction, &mut scanned);
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in x.iter().enumerate() {
            local[v] = i;
        }
        // The ball as a graph oriented like the searched side.
        let mut edges = Vec::new();
        let mut blue = vec![false; x.len()];
        let mut leaves = vec![false; x.len()];
        for (i, &v) in x.iter().enumerate() {
            for (e, other, incoming) in incident(g, v, direction) {
                scanned += 1;
                if !self.alive[e] {
                    continue;
                }
                let inside = local[other] != usize::MAX;
                match (incoming, inside) {
                    (true, true) => edges.push((local[other], i)),
                    (true, false) => blue[i] = true,
                    (false, false) => leaves[i] = true,
                    (false, true) => {}
                }
            }
        }
        self.counters.ball_edges += scanned;
        let hg = Graph::assemble(x.len(), edges, false);
        let back = |s: Vec<VertexId>| -> Vec<VertexId> {
            let mut s: Vec<VertexId> = s.into_iter().map(|v| x[v]).collect();
            s.sort_unstable();
            s
        };

        let t = top_scc_excluding_mask(&hg, &blue);
        if !t.is_empty() {
            let in_t = mask(x.len(), &t);
            let exits = t.iter().any(|&v| leaves[v]) || hg.edges().iter().any(|&(a, b)| in_t[a] && !in_t[b]);
            if exits {
                return Some((back(t), LocalBranch::Tscc, x.len()));
            }
            // `t` is all of the ball and nothing leaves it.
            let bridges = strong_bridges(&hg);
            let &e = bridges.first()?;
            let s = top_scc(&hg.without_edges(&[e]).graph);
            return Some((back(s), LocalBranch::Bridge, x.len()));
        }
        let fg = contracted(&hg, &blue);
        let e = edge_dominators(&fg.graph, fg.root).into_iter().min_by_key(|&e| fg.graph.edge(e))?;
        let e = fg.edge_origin[e].expect("contracted edges map back");
        let s = top_scc_excluding_mask(&hg.without_edges(&[e]).graph, &blue);
        debug_assert!(!s.is_empty());
        if s.is_empty() {
            return None;
        }
        Some((back(s), LocalBranch::Dominator, x.len()))
    }

    fn verify(&mut self, j: VertexId, s: &[VertexId], direction: Direction) {
        let (live, _) = self.live_graph();
        let in_s = mask(live.n(), s);
        let oriented = |(u, v): (VertexId, VertexId)| match direction {
            Direction::Forward => (u, v),
            Direction::Reverse => (v, u),
        };
        let z: Vec<usize> = (0..live.m())
            .filter(|&e| {
                let (a, b) = oriented(live.edge(e));
                in_s[b] && !in_s[a]
            })
            .collect();
        let res = IsolationResult { s: s.to_vec(), z, side: direction, provenance: Provenance::Tscc, level: None };
        if !check_isolation(&live, &res, 2, Mode::Edge) {
            self.violations.push(LocalViolation { j, s: s.to_vec() });
        }
    }
}

/// Edges at `v` as `(edge, other endpoint, enters v on the searched side)`.
fn incident(g: &Graph, v: VertexId, direction: Direction) -> impl Iterator<Item = (usize, VertexId, bool)> + '_ {
    let forward = direction == Direction::Forward;
    let ins = g.in_edges(v).iter().map(move |&e| (e, g.edge(e).0, forward));
    let outs = g.out_edges(v).iter().map(move |&e| (e, g.edge(e).1, !forward));
    ins.chain(outs)
}

/// BFS along searched-side in-edges of live edges, up to depth `d`, in
/// discovery order.
fn ball(g: &Graph, alive: &[bool], j: VertexId, d: usize, direction: Direction, scanned: &mut u64) -> Vec<VertexId> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(j);
    let mut order = vec![j];
    let mut frontier = vec![j];
    for _ in 0..d {
        let mut next = Vec::new();
        for &v in &frontier {
            let list = match direction {
                Direction::Forward => g.in_edges(v),
                Direction::Reverse => g.out_edges(v),
            };
            for &e in list {
                *scanned += 1;
                if !alive[e] {
                    continue;
                }
                let (a, b) = g.edge(e);
                let w = if direction == Direction::Forward { a } else { b };
                if seen.insert(w) {
                    order.push(w);
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    order
}
