//! k-separators of strongly connected graphs and k-dominators of flow graphs.
//!
//! For k = 2 both reduce to dominator computations. For larger k a capped
//! flow finds some cut of fewer than k elements, which is then shrunk to the
//! first subset (by size, then index order) that still has the required effect.

use serde::Serialize;

use crate::components::Mode;
use crate::error::{Error, Result};
use crate::graph::{mask, Graph, VertexId};
use crate::level::RootedFlowGraph;
use crate::primitives::bridges::{strong_articulation_points, strong_bridges};
use crate::primitives::dominators::{dominator_pairs, edge_dominators};
use crate::primitives::flow::capped_flow;
use crate::primitives::scc::is_strongly_connected;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeparatorRole {
    KSeparator,
    KDominator,
    Isolating,
}

/// Fewer than k edges (by id) or vertices, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    mode: Mode,
    role: SeparatorRole,
    members: Vec<usize>,
}

impl Separator {
    pub fn new(mode: Mode, role: SeparatorRole, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        Separator { mode, role, members }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn role(&self) -> SeparatorRole {
        self.role
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn into_members(self) -> Vec<usize> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Edge members as `(tail, head)` pairs of `g`.
    pub fn edge_pairs(&self, g: &Graph) -> Vec<(VertexId, VertexId)> {
        debug_assert_eq!(self.mode, Mode::Edge);
        self.members.iter().map(|&e| g.edge(e)).collect()
    }
}

pub(crate) fn check_order(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidOrder(k))
    } else {
        Ok(())
    }
}

/// Whether removing `members` leaves `g` not strongly connected.
pub fn separates(g: &Graph, members: &[usize], mode: Mode) -> bool {
    let sub = match mode {
        Mode::Edge => g.without_edges(members),
        Mode::Vertex => g.without_vertices(&mask(g.n(), members)),
    };
    !is_strongly_connected(&sub.graph)
}

/// Whether removing `members` cuts some vertex off from `root`.
pub fn dominates_some(g: &Graph, root: VertexId, members: &[usize], mode: Mode) -> bool {
    let base = g.reachable_from(root, None, None);
    let reach = match mode {
        Mode::Edge => g.reachable_from(root, None, Some(&mask(g.m(), members))),
        Mode::Vertex => {
            if members.contains(&root) {
                return false;
            }
            g.reachable_from(root, Some(&mask(g.n(), members)), None)
        }
    };
    (0..g.n()).any(|v| base[v] && !reach[v] && !(mode == Mode::Vertex && members.contains(&v)))
}

/// A k-separator of the strongly connected graph `g`, if one exists.
pub fn k_separator(g: &Graph, k: usize, mode: Mode) -> Result<Option<Separator>> {
    check_order(k)?;
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    Ok(find_separator(g, k, mode))
}

pub(crate) fn find_separator(g: &Graph, k: usize, mode: Mode) -> Option<Separator> {
    let n = g.n();
    if n <= 1 {
        return None;
    }
    let make = |m: Vec<usize>| Separator::new(mode, SeparatorRole::KSeparator, m);
    if k == 2 {
        return match mode {
            Mode::Vertex => strong_articulation_points(g).first().map(|&v| make(vec![v])),
            Mode::Edge => strong_bridges(g).first().map(|&e| make(vec![e])),
        };
    }
    let pivots = match mode {
        Mode::Edge => 1,
        Mode::Vertex => k.min(n),
    };
    for p in 0..pivots {
        for x in (0..n).filter(|&x| x != p) {
            for (s, t) in [(p, x), (x, p)] {
                if let Some(cut) = capped_flow(g, s, t, k, mode).cut {
                    let z = shrink(&cut, |z| separates(g, z, mode));
                    return Some(make(z));
                }
            }
        }
    }
    None
}

/// A k-dominator of the flow graph, if one exists.
pub fn k_dominator(fg: &RootedFlowGraph, k: usize, mode: Mode) -> Result<Option<Separator>> {
    check_order(k)?;
    Ok(find_dominator(&fg.graph, fg.root, k, mode))
}

pub(crate) fn find_dominator(g: &Graph, root: VertexId, k: usize, mode: Mode) -> Option<Separator> {
    let make = |m: Vec<usize>| Separator::new(mode, SeparatorRole::KDominator, m);
    if k == 2 {
        return match mode {
            Mode::Vertex => dominator_pairs(g, root).first().map(|&(d, _)| make(vec![d])),
            Mode::Edge => edge_dominators(g, root)
                .into_iter()
                .min_by_key(|&e| g.edge(e))
                .map(|e| make(vec![e])),
        };
    }
    let reach = g.reachable_from(root, None, None);
    for u in (0..g.n()).filter(|&u| u != root && reach[u]) {
        if mode == Mode::Vertex && g.has_edge(root, u) {
            continue;
        }
        if let Some(cut) = capped_flow(g, root, u, k, mode).cut {
            let z = shrink(&cut, |z| dominates_some(g, root, z, mode));
            return Some(make(z));
        }
    }
    None
}

/// First nonempty subset of `cut` (by size, then index order) accepted by `ok`.
/// `cut` itself must be accepted.
fn shrink(cut: &[usize], ok: impl Fn(&[usize]) -> bool) -> Vec<usize> {
    for size in 1..cut.len() {
        let mut found = None;
        for_each_subset(cut, size, &mut |z| {
            if found.is_none() && ok(z) {
                found = Some(z.to_vec());
            }
            found.is_some()
        });
        if let Some(z) = found {
            return z;
        }
    }
    cut.to_vec()
}

/// Calls `f` on each `size`-subset of `items` in lexicographic index order
/// until it returns true.
pub(crate) fn for_each_subset(items: &[usize], size: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    let n = items.len();
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut buf = vec![0; size];
    loop {
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = items[i];
        }
        if f(&buf) {
            return;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + n - size) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::generate::gen_random;

    fn subsets_fail(sep: &Separator, ok: impl Fn(&[usize]) -> bool) -> bool {
        let m = sep.members();
        (0..m.len()).all(|skip| {
            let sub: Vec<_> = m.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &x)| x).collect();
            sub.is_empty() || !ok(&sub)
        })
    }

    #[test]
    fn subsets_in_order() {
        let mut seen = Vec::new();
        for_each_subset(&[4, 5, 6], 2, &mut |z| {
            seen.push(z.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![4, 5], vec![4, 6], vec![5, 6]]);
        let mut count = 0;
        for_each_subset(&[1], 1, &mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn spec_separators() {
        assert_eq!(k_separator(&fixtures::bitri(), 2, Mode::Vertex).unwrap(), None);
        let s = k_separator(&fixtures::bowtie(), 2, Mode::Vertex).unwrap().unwrap();
        assert_eq!(s.members(), &[2]);
        let g = fixtures::two_cycle_bridge();
        let s = k_separator(&g, 2, Mode::Edge).unwrap().unwrap();
        assert_eq!(s.len(), 1);
        assert!(separates(&g, s.members(), Mode::Edge));
        assert_eq!(k_separator(&fixtures::path(3), 2, Mode::Edge), Err(Error::NotStronglyConnected));
    }

    #[test]
    fn spec_dominators() {
        let fg = RootedFlowGraph::new(fixtures::path(3), 0);
        assert_eq!(k_dominator(&fg, 2, Mode::Vertex).unwrap().unwrap().members(), &[1]);
        let fg = RootedFlowGraph::new(fixtures::diamond(), 0);
        assert_eq!(k_dominator(&fg, 3, Mode::Vertex).unwrap().unwrap().members(), &[1, 2]);
        assert_eq!(k_dominator(&fg, 2, Mode::Vertex).unwrap(), None);
        let fg = RootedFlowGraph::new(fixtures::bitri(), 0);
        assert_eq!(k_dominator(&fg, 2, Mode::Vertex).unwrap(), None);
    }

    #[test]
    fn general_k_agrees_with_dominators_at_two() {
        // The flow-based search run with k = 2 must agree with the dominator route.
        for seed in 0..200 {
            let g = gen_random(8, 0.25, seed).unwrap();
            for mode in [Mode::Vertex, Mode::Edge] {
                let fast = find_dominator(&g, 0, 2, mode).is_some();
                let slow = flow_dominator(&g, 0, 2, mode).is_some();
                assert_eq!(fast, slow, "seed {seed} {mode:?}");
            }
        }
    }

    fn flow_dominator(g: &Graph, root: VertexId, k: usize, mode: Mode) -> Option<Vec<usize>> {
        let reach = g.reachable_from(root, None, None);
        (0..g.n())
            .filter(|&u| u != root && reach[u])
            .filter(|&u| !(mode == Mode::Vertex && g.has_edge(root, u)))
            .find_map(|u| capped_flow(g, root, u, k, mode).cut)
    }

    #[test]
    fn separator_minimality_random() {
        for seed in 0..150 {
            let g = gen_random(7, 0.45, seed).unwrap();
            if !is_strongly_connected(&g) {
                continue;
            }
            for mode in [Mode::Edge, Mode::Vertex] {
                for k in 2..=4 {
                    let Some(s) = k_separator(&g, k, mode).unwrap() else {
                        continue;
                    };
                    assert!(s.len() < k);
                    assert!(separates(&g, s.members(), mode));
                    assert!(subsets_fail(&s, |z| separates(&g, z, mode)));
                }
                for k in 2..=4 {
                    let Some(z) = find_dominator(&g, 0, k, mode) else { continue };
                    assert!(z.len() < k);
                    assert!(dominates_some(&g, 0, z.members(), mode));
                    assert!(subsets_fail(&z, |m| dominates_some(&g, 0, m, mode)));
                }
            }
        }
    }

    #[test]
    fn separator_existence_matches_enumeration() {
        // A k-separator exists iff some set of fewer than k elements disconnects.
        for seed in 0..120 {
            let g = gen_random(6, 0.5, seed).unwrap();
            if !is_strongly_connected(&g) {
                continue;
            }
            for mode in [Mode::Edge, Mode::Vertex] {
                let universe: Vec<usize> = match mode {
                    Mode::Edge => (0..g.m()).collect(),
                    Mode::Vertex => (0..g.n()).collect(),
                };
                for k in 2..=4 {
                    let mut exists = false;
                    for size in 1..k {
                        for_each_subset(&universe, size, &mut |z| {
                            exists |= separates(&g, z, mode);
                            exists
                        });
                    }
                    let found = k_separator(&g, k, mode).unwrap().is_some();
                    assert_eq!(found, exists, "seed {seed} {mode:?} k={k}");
                }
            }
        }
    }
}
