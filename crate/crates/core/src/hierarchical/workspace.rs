//! Shared adjacency storage for the recursion.
//!
//! Every subproblem is a *part*: a set of slots with the same part id. A
//! slot is a copy of an original vertex; vertex splits copy separator
//! vertices into the new part. An edge is live exactly when both endpoint
//! slots are in the same part, so splitting only relabels slots and stale
//! adjacency entries are purged the next time a scan walks over them.

use std::collections::HashMap;

use crate::graph::{Graph, VertexId};
use crate::level::{level_cap, Direction, LevelSubgraph};

pub(crate) type Slot = usize;
pub(crate) type PartId = u32;

#[derive(Clone, Debug)]
pub(crate) struct Task {
    pub part: PartId,
    /// Slots ordered by original vertex id; the position is the local id.
    pub members: Vec<Slot>,
}

#[derive(Debug)]
struct AdjList {
    entries: Vec<usize>,
    /// Entries before `start` are known to be stale.
    start: usize,
}

impl AdjList {
    fn new() -> Self {
        AdjList { entries: Vec::new(), start: 0 }
    }
}

#[derive(Debug)]
pub(crate) struct Workspace {
    orig: Vec<VertexId>,
    part: Vec<PartId>,
    /// Edge -> (tail slot, head slot).
    edges: Vec<(Slot, Slot)>,
    /// Edge -> id of the input edge it descends from.
    orig_edge: Vec<usize>,
    out: Vec<AdjList>,
    inn: Vec<AdjList>,
    next_part: PartId,
    local: Vec<usize>,
    scratch: Vec<usize>,
}

impl Workspace {
    pub fn new(g: &Graph) -> (Self, Task) {
        let n = g.n();
        let mut out: Vec<AdjList> = (0..n).map(|_| AdjList::new()).collect();
        let mut inn: Vec<AdjList> = (0..n).map(|_| AdjList::new()).collect();
        for v in 0..n {
            out[v].entries.extend_from_slice(g.out_edges(v));
            inn[v].entries.extend_from_slice(g.in_edges(v));
        }
        let ws = Workspace {
            orig: (0..n).collect(),
            part: vec![0; n],
            edges: g.edges().to_vec(),
            orig_edge: (0..g.m()).collect(),
            out,
            inn,
            next_part: 1,
            local: vec![usize::MAX; n],
            scratch: Vec::new(),
        };
        (ws, Task { part: 0, members: (0..n).collect() })
    }

    pub fn orig(&self, slot: Slot) -> VertexId {
        self.orig[slot]
    }

    /// Input-graph endpoints of a workspace edge.
    pub fn orig_pair(&self, e: usize) -> (VertexId, VertexId) {
        let (a, b) = self.edges[e];
        (self.orig[a], self.orig[b])
    }

    /// Makes local ids of `task` available to the scans below.
    pub fn bind(&mut self, task: &Task) {
        for (i, &s) in task.members.iter().enumerate() {
            self.local[s] = i;
        }
    }

    /// Level-`i` subgraph of the bound task; edge ids of the result map to
    /// workspace edges. Returns the subgraph and the number of entries scanned.
    pub fn level(&mut self, task: &Task, i: usize, direction: Direction) -> (LevelSubgraph, u64) {
        let cap = level_cap(i);
        let n = task.members.len();
        let mut edges = Vec::new();
        let mut base_edge = Vec::new();
        let mut blue = vec![false; n];
        let mut scanned = 0u64;
        for (li, &slot) in task.members.iter().enumerate() {
            let list = match direction {
                Direction::Forward => &mut self.inn[slot],
                Direction::Reverse => &mut self.out[slot],
            };
            self.scratch.clear();
            let mut pos = list.start;
            while pos < list.entries.len() && self.scratch.len() <= cap {
                let e = list.entries[pos];
                let (a, b) = self.edges[e];
                let other = if direction == Direction::Forward { a } else { b };
                if self.part[other] == task.part {
                    self.scratch.push(e);
                }
                pos += 1;
            }
            scanned += (pos - list.start) as u64;
            // Pack the live entries against `pos` so the stale ones fall
            // before the new start.
            let dead = pos - list.start - self.scratch.len();
            list.entries[list.start + dead..pos].copy_from_slice(&self.scratch);
            list.start += dead;

            blue[li] = self.scratch.len() > cap;
            for &e in self.scratch.iter().take(cap) {
                let (a, b) = self.edges[e];
                let other = if direction == Direction::Forward { a } else { b };
                edges.push((self.local[other], li));
                base_edge.push(e);
            }
        }
        (LevelSubgraph::from_parts(i, direction, n, edges, base_edge, blue), scanned)
    }

    /// The bound task as a plain graph with edges in input order. Returns the
    /// graph, its edge -> workspace edge map and the entries scanned.
    pub fn materialize(&mut self, task: &Task) -> (Graph, Vec<usize>, u64) {
        let mut live = Vec::new();
        let mut scanned = 0u64;
        for &slot in &task.members {
            let list = &mut self.inn[slot];
            scanned += (list.entries.len() - list.start) as u64;
            let before = live.len();
            for &e in &list.entries[list.start..] {
                let (a, b) = self.edges[e];
                if self.part[a] == task.part && self.part[b] == task.part {
                    live.push(e);
                }
            }
            list.entries = live[before..].to_vec();
            list.start = 0;
        }
        live.sort_unstable_by_key(|&e| self.orig_edge[e]);
        let edges = live.iter().map(|&e| (self.local[self.edges[e].0], self.local[self.edges[e].1])).collect();
        (Graph::assemble(task.members.len(), edges, false), live, scanned)
    }

    /// Edge-mode split: `s` (local ids, sorted) becomes its own part.
    pub fn split_edge(&mut self, task: Task, s: &[usize]) -> (Task, Task) {
        let p = self.fresh_part();
        let mut in_s = vec![false; task.members.len()];
        for &x in s {
            in_s[x] = true;
            self.part[task.members[x]] = p;
        }
        let (inside, rest): (Vec<(usize, Slot)>, Vec<(usize, Slot)>) =
            task.members.iter().copied().enumerate().partition(|&(i, _)| in_s[i]);
        (
            Task { part: p, members: inside.into_iter().map(|(_, s)| s).collect() },
            Task { part: task.part, members: rest.into_iter().map(|(_, s)| s).collect() },
        )
    }

    /// Vertex-mode split into `G[S + Z]` and `G[V \ S]`: `s` moves to a new
    /// part and every vertex of `z` (local ids) gets a copy there.
    pub fn split_vertex(&mut self, task: Task, s: &[usize], z: &[usize]) -> (Task, Task) {
        let p = self.fresh_part();
        let old = task.part;
        let mut in_s = vec![false; task.members.len()];
        for &x in s {
            in_s[x] = true;
            self.part[task.members[x]] = p;
        }
        let mut copy: HashMap<Slot, Slot> = HashMap::with_capacity(z.len());
        for &x in z {
            let slot = task.members[x];
            let c = self.orig.len();
            self.orig.push(self.orig[slot]);
            self.part.push(p);
            self.out.push(AdjList::new());
            self.inn.push(AdjList::new());
            self.local.push(usize::MAX);
            copy.insert(slot, c);
        }
        // Edges between two separator vertices exist on both sides.
        let mut duplicate: HashMap<usize, usize> = HashMap::new();
        for &x in z {
            let slot = task.members[x];
            let c = copy[&slot];
            for outgoing in [true, false] {
                let list = if outgoing { &mut self.out[slot] } else { &mut self.inn[slot] };
                let entries = std::mem::take(&mut list.entries);
                let start = list.start;
                let mut keep = Vec::with_capacity(entries.len() - start);
                let mut moved = Vec::new();
                for &e in &entries[start..] {
                    let (a, b) = self.edges[e];
                    let other = if outgoing { b } else { a };
                    if let Some(&oc) = copy.get(&other) {
                        let d = *duplicate.entry(e).or_insert_with(|| {
                            let (ca, cb) = if outgoing { (c, oc) } else { (oc, c) };
                            self.edges.push((ca, cb));
                            self.orig_edge.push(self.orig_edge[e]);
                            self.edges.len() - 1
                        });
                        keep.push(e);
                        moved.push(d);
                    } else if self.part[other] == p {
                        if outgoing {
                            self.edges[e].0 = c;
                        } else {
                            self.edges[e].1 = c;
                        }
                        moved.push(e);
                    } else if self.part[other] == old {
                        keep.push(e);
                    }
                }
                let list = if outgoing { &mut self.out[slot] } else { &mut self.inn[slot] };
                list.entries = keep;
                list.start = 0;
                let target = if outgoing { &mut self.out[c] } else { &mut self.inn[c] };
                target.entries = moved;
            }
        }
        let mut inside: Vec<Slot> = task
            .members
            .iter()
            .enumerate()
            .filter(|&(i, _)| in_s[i])
            .map(|(_, &s)| s)
            .chain(copy.values().copied())
            .collect();
        inside.sort_unstable_by_key(|&s| self.orig[s]);
        let rest: Vec<Slot> =
            task.members.iter().enumerate().filter(|&(i, _)| !in_s[i]).map(|(_, &s)| s).collect();
        (Task { part: p, members: inside }, Task { part: old, members: rest })
    }

    fn fresh_part(&mut self) -> PartId {
        let p = self.next_part;
        self.next_part += 1;
        p
    }
}
