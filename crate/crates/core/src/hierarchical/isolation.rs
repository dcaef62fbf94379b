//! Searches for a (k-almost) top or bottom SCC: per level and on the whole graph.

use serde::Serialize;

use crate::components::Mode;
use crate::error::{Error, Result};
use crate::graph::{mask, EdgeId, Graph, VertexId};
use crate::level::{flow_graphs, level_subgraph, Direction, LevelSubgraph};
use crate::primitives::scc::{is_strongly_connected, scc, top_scc, top_scc_excluding_mask};
use crate::primitives::separators::{check_order, find_dominator, find_separator};
use crate::trace::Provenance;

/// A set `S` that is a top (forward side) or bottom (reverse side) SCC of
/// `G \ Z`, where every element of `Z` enters `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolationResult {
    pub s: Vec<VertexId>,
    /// Vertex ids (vertex mode) or edge ids of the searched graph (edge mode), sorted.
    pub z: Vec<usize>,
    pub side: Direction,
    pub provenance: Provenance,
    /// Level that produced the set; `None` for the whole-graph search.
    pub level: Option<usize>,
}

/// Level-`i` search on `G` and then `G^R`.
///
/// Requires `2^i < gamma`, i.e. both level subgraphs have blue vertices.
pub fn k_isolated_set_level(g: &Graph, i: usize, k: usize, mode: Mode) -> Result<Option<IsolationResult>> {
    check_order(k)?;
    let gamma = g.degree_bound().gamma;
    if i == 0 || !g.degree_bound().admits_level(i) {
        return Err(Error::LevelOutOfRange { level: i, gamma });
    }
    let levels = [level_subgraph(g, i, Direction::Forward)?, level_subgraph(g, i, Direction::Reverse)?];
    Ok(search_level(&levels, k, mode))
}

/// Whole-graph search: a proper tSCC if `g` is not strongly connected,
/// otherwise a tSCC of `g \ Z` for some k-separator `Z`.
pub fn k_isolated_set(g: &Graph, k: usize, mode: Mode) -> Result<Option<IsolationResult>> {
    check_order(k)?;
    Ok(search_whole(g, k, mode))
}

pub(crate) fn search_level(levels: &[LevelSubgraph; 2], k: usize, mode: Mode) -> Option<IsolationResult> {
    levels.iter().find_map(|ls| search_one_direction(ls, k, mode))
}

fn search_one_direction(ls: &LevelSubgraph, k: usize, mode: Mode) -> Option<IsolationResult> {
    let g = &ls.graph;
    let done = |s: Vec<VertexId>, z: Vec<usize>, provenance| {
        let z = trim(g, &s, z, mode);
        let z = match mode {
            Mode::Edge => {
                let mut z: Vec<EdgeId> = z.into_iter().map(|e| ls.base_edge[e]).collect();
                z.sort_unstable();
                z
            }
            Mode::Vertex => z,
        };
        Some(IsolationResult { s, z, side: ls.direction, provenance, level: Some(ls.level) })
    };

    let s = top_scc_excluding_mask(g, &ls.blue);
    if !s.is_empty() {
        return done(s, Vec::new(), Provenance::Tscc);
    }
    let blues = ls.blue_vertices();
    for fg in flow_graphs(g, &ls.blue, k, mode) {
        let Some(z) = find_dominator(&fg.graph, fg.root, k, mode) else { continue };
        let z: Vec<usize> = match mode {
            Mode::Vertex => z.members().iter().map(|&v| fg.vertex_origin[v].expect("root never in Z")).collect(),
            Mode::Edge => z.members().iter().map(|&e| fg.edge_origin[e].expect("contracted edges map back")).collect(),
        };
        let s = top_excluding_after_removal(g, &z, &ls.blue, mode);
        debug_assert!(!s.is_empty(), "a k-dominator always exposes a white tSCC");
        if !s.is_empty() {
            return done(s, z, Provenance::Dominator);
        }
    }
    if mode == Mode::Edge || blues.len() >= k {
        return None;
    }

    // Vertex mode with fewer than k blue vertices: Z may contain all of them.
    let without_blue = g.without_vertices(&ls.blue);
    let white_count = without_blue.graph.n();
    let s = without_blue.parent_vertices(&top_scc(&without_blue.graph));
    if !s.is_empty() && s.len() < white_count {
        return done(s, blues, Provenance::BlueSingletonSpecial);
    }
    if blues.len() + 1 < k && white_count > 0 {
        if let Some(z2) = find_separator(&without_blue.graph, k - blues.len(), Mode::Vertex) {
            let mut z = without_blue.parent_vertices(z2.members());
            z.extend(&blues);
            z.sort_unstable();
            let rest = g.without_vertices(&mask(g.n(), &z));
            let s = rest.parent_vertices(&top_scc(&rest.graph));
            return done(s, z, Provenance::BlueSupersetSpecial);
        }
    }
    None
}

/// Top SCC of `g \ z` avoiding `excluded`, in the vertex ids of `g`.
fn top_excluding_after_removal(g: &Graph, z: &[usize], excluded: &[bool], mode: Mode) -> Vec<VertexId> {
    match mode {
        Mode::Edge => top_scc_excluding_mask(&g.without_edges(z).graph, excluded),
        Mode::Vertex => {
            let sub = g.without_vertices(&mask(g.n(), z));
            let local_excluded: Vec<bool> = sub.vertex_map.iter().map(|&v| excluded[v]).collect();
            sub.parent_vertices(&top_scc_excluding_mask(&sub.graph, &local_excluded))
        }
    }
}

/// Keeps the elements of `z` that actually enter `s` in `g`.
fn trim(g: &Graph, s: &[VertexId], z: Vec<usize>, mode: Mode) -> Vec<usize> {
    let in_s = mask(g.n(), s);
    let mut out: Vec<usize> = match mode {
        Mode::Vertex => z.into_iter().filter(|&x| g.successors(x).any(|w| in_s[w])).collect(),
        Mode::Edge => z
            .into_iter()
            .filter(|&e| {
                let (u, v) = g.edge(e);
                in_s[v] && !in_s[u]
            })
            .collect(),
    };
    out.sort_unstable();
    out.dedup();
    out
}

pub(crate) fn search_whole(g: &Graph, k: usize, mode: Mode) -> Option<IsolationResult> {
    let n = g.n();
    let s = top_scc(g);
    if s.is_empty() {
        return None;
    }
    let make = |s: Vec<VertexId>, z: Vec<usize>, provenance| IsolationResult {
        z: trim(g, &s, z, mode),
        s,
        side: Direction::Forward,
        provenance,
        level: None,
    };
    if s.len() < n {
        return Some(make(s, Vec::new(), Provenance::Tscc));
    }
    let z = find_separator(g, k, mode)?.into_members();
    let s = match mode {
        Mode::Edge => top_scc(&g.without_edges(&z).graph),
        Mode::Vertex => {
            let sub = g.without_vertices(&mask(n, &z));
            sub.parent_vertices(&top_scc(&sub.graph))
        }
    };
    Some(make(s, z, Provenance::WholeGraph))
}

/// Checks from the definitions that `res.s` is a top SCC (forward side) or
/// bottom SCC (reverse side) of `g` after removing `res.z`, that each
/// element of `res.z` enters `res.s`, and that something is left outside
/// `res.s` and `res.z`.
pub fn check_isolation(g: &Graph, res: &IsolationResult, k: usize, mode: Mode) -> bool {
    let n = g.n();
    if res.s.is_empty() || res.z.len() >= k {
        return false;
    }
    let oriented = match res.side {
        Direction::Forward => g.clone(),
        Direction::Reverse => g.reverse(),
    };
    let in_s = mask(n, &res.s);
    let in_z = match mode {
        Mode::Vertex => mask(n, &res.z),
        Mode::Edge => mask(g.m(), &res.z),
    };
    if mode == Mode::Vertex && res.z.iter().any(|&z| in_s[z]) {
        return false;
    }
    let outside = (0..n).filter(|&v| !in_s[v] && !(mode == Mode::Vertex && in_z[v])).count();
    if outside == 0 {
        return false;
    }
    if !is_strongly_connected(&g.induced_subgraph(&res.s).graph) {
        return false;
    }
    let mut used = vec![false; in_z.len()];
    for (e, &(u, v)) in oriented.edges().iter().enumerate() {
        if !in_s[v] || in_s[u] {
            continue;
        }
        let via = match mode {
            Mode::Vertex => u,
            Mode::Edge => e,
        };
        if !in_z[via] {
            return false;
        }
        used[via] = true;
    }
    res.z.iter().all(|&x| used[x])
}

/// Whether `s` induces a tSCC of `g` (used for level-subgraph equivalence checks).
pub fn is_top_scc(g: &Graph, s: &[VertexId]) -> bool {
    let p = scc(g);
    let c = p.comp_of[s[0]];
    p.is_top[c] && p.components[c].len() == s.len() && s.iter().all(|&v| p.comp_of[v] == c)
}
