//! Recursive k-edge / k-vertex connected components via level-by-level
//! searches for isolated sets.

mod isolation;
mod workspace;

pub use isolation::{check_isolation, is_top_scc, k_isolated_set, k_isolated_set_level, IsolationResult};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::components::{ComponentSet, Mode};
use crate::error::Result;
use crate::graph::{mask, Graph, VertexId};
use crate::level::Direction;
use crate::oracle::{naive_sets, pairwise_k_connected};
use crate::primitives::separators::check_order;
use crate::trace::{augmentations, Provenance, TraceEvent, WorkCounters};

use isolation::{search_level, search_whole};
use workspace::{Task, Workspace};

/// When a subproblem is small enough for the naive algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseCase {
    /// Edge mode: at most 8 vertices. Vertex mode: at most 8 vertices for
    /// k = 2, fewer than 14k^3 otherwise.
    Default,
    /// At most this many vertices.
    AtMost(usize),
}

impl BaseCase {
    fn applies(self, n: usize, k: usize, mode: Mode) -> bool {
        n <= 1
            || match self {
                BaseCase::AtMost(t) => n <= t,
                BaseCase::Default => match mode {
                    Mode::Vertex if k > 2 => n < 14 * k * k * k,
                    _ => n <= 8,
                },
            }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct KsccConfig {
    pub base_case: BaseCase,
    /// Re-check every split from the definitions and collect violations.
    pub verify: bool,
    /// Keep the sequence of splits in [`KsccRun::splits`].
    pub record_splits: bool,
    pub trace: bool,
}

impl Default for KsccConfig {
    fn default() -> Self {
        KsccConfig { base_case: BaseCase::Default, verify: false, record_splits: false, trace: false }
    }
}

/// One split, in input vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitRecord {
    /// Size of the subproblem that was split.
    pub n: usize,
    pub s: Vec<VertexId>,
    /// Separator vertices (vertex mode).
    pub z: Vec<VertexId>,
    /// Separator edges (edge mode).
    pub z_edges: Vec<(VertexId, VertexId)>,
    pub provenance: Provenance,
    pub direction: Direction,
    pub level: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// The isolated set is not larger than the level guarantees.
    SizeBound,
    /// Nothing is left outside `S` and `Z`.
    EmptyRemainder,
    Isolation,
    /// A pair across the split is still k-connected.
    CrossConnectivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub split: SplitRecord,
}

#[derive(Clone, Debug)]
pub struct KsccRun {
    pub components: ComponentSet,
    pub counters: WorkCounters,
    pub splits: Vec<SplitRecord>,
    pub violations: Vec<Violation>,
    pub trace: Vec<TraceEvent>,
}

/// k-edge (`Mode::Edge`) or k-vertex (`Mode::Vertex`) connected components.
pub fn kscc(g: &Graph, k: usize, mode: Mode) -> Result<ComponentSet> {
    Ok(kscc_with(g, k, mode, &KsccConfig::default())?.components)
}

pub fn kscc_with(g: &Graph, k: usize, mode: Mode, config: &KsccConfig) -> Result<KsccRun> {
    check_order(k)?;
    let flows_before = augmentations();
    let mut run = Runner {
        k,
        mode,
        config: *config,
        counters: WorkCounters::default(),
        splits: Vec::new(),
        violations: Vec::new(),
        trace: Vec::new(),
        sets: Vec::new(),
        rng: ChaCha8Rng::seed_from_u64(0x6b73_6363),
    };
    let (mut ws, root) = Workspace::new(g);
    let mut stack = vec![root];
    while let Some(task) = stack.pop() {
        stack.extend(run.step(&mut ws, task));
    }
    run.counters.flow_augmentations = augmentations() - flows_before;
    Ok(KsccRun {
        components: ComponentSet::from_vertex_sets(g, k, mode, run.sets),
        counters: run.counters,
        splits: run.splits,
        violations: run.violations,
        trace: run.trace,
    })
}

struct Runner {
    k: usize,
    mode: Mode,
    config: KsccConfig,
    counters: WorkCounters,
    splits: Vec<SplitRecord>,
    violations: Vec<Violation>,
    trace: Vec<TraceEvent>,
    sets: Vec<Vec<VertexId>>,
    rng: ChaCha8Rng,
}

impl Runner {
    fn note(&mut self, event: TraceEvent) {
        if self.config.trace {
            self.trace.push(event);
        }
    }

    /// Handles one subproblem and returns the subproblems it splits into.
    fn step(&mut self, ws: &mut Workspace, task: Task) -> Vec<Task> {
        let n = task.members.len();
        ws.bind(&task);
        let origs: Vec<VertexId> = task.members.iter().map(|&s| ws.orig(s)).collect();
        if self.config.base_case.applies(n, self.k, self.mode) {
            let (g, _, scanned) = ws.materialize(&task);
            self.counters.level_edges_scanned += scanned;
            self.counters.base_cases += 1;
            self.note(TraceEvent::BaseCase { n });
            for set in naive_sets(&g, self.k, self.mode) {
                self.sets.push(set.iter().map(|&v| origs[v]).collect());
            }
            return Vec::new();
        }

        let mut found = None;
        for i in 1.. {
            let (fwd, a) = ws.level(&task, i, Direction::Forward);
            let (rev, b) = ws.level(&task, i, Direction::Reverse);
            self.counters.level_edges_scanned += a + b;
            if !fwd.has_blue() || !rev.has_blue() {
                break;
            }
            let (blue_forward, blue_reverse) = (fwd.blue_count(), rev.blue_count());
            let levels = [fwd, rev];
            let res = search_level(&levels, self.k, self.mode);
            self.note(TraceEvent::Level {
                n,
                level: i,
                blue_forward,
                blue_reverse,
                found: res.as_ref().map(|r| r.provenance),
                direction: res.as_ref().map(|r| r.side),
            });
            if let Some(res) = res {
                let ls = &levels[usize::from(res.side == Direction::Reverse)];
                let z_edges = match self.mode {
                    Mode::Edge => res.z.iter().map(|&e| ws.orig_pair(e)).collect(),
                    Mode::Vertex => Vec::new(),
                };
                found = Some((res, i, z_edges));
                debug_assert_eq!(ls.level, i);
                break;
            }
        }

        let (g, edge_map) = if found.is_none() || self.config.verify {
            let (g, map, scanned) = ws.materialize(&task);
            self.counters.level_edges_scanned += scanned;
            (Some(g), map)
        } else {
            (None, Vec::new())
        };
        let (mut res, i_star, z_edges) = match found {
            Some(f) => f,
            None => {
                let g = g.as_ref().expect("materialized");
                let res = search_whole(g, self.k, self.mode);
                self.note(TraceEvent::WholeGraph { n, m: g.m(), found: res.as_ref().map(|r| r.provenance) });
                let Some(res) = res else {
                    self.sets.push(origs);
                    return Vec::new();
                };
                let z_edges = match self.mode {
                    Mode::Edge => res.z.iter().map(|&e| ws.orig_pair(edge_map[e])).collect(),
                    Mode::Vertex => Vec::new(),
                };
                let i_star = g.degree_bound().ceil_log();
                // Keep edge ids of `res` in workspace terms like the level results.
                let mut res = res;
                if self.mode == Mode::Edge {
                    res.z = res.z.iter().map(|&e| edge_map[e]).collect();
                }
                (res, i_star, z_edges)
            }
        };

        let record = SplitRecord {
            n,
            s: res.s.iter().map(|&v| origs[v]).collect(),
            z: match self.mode {
                Mode::Vertex => res.z.iter().map(|&v| origs[v]).collect(),
                Mode::Edge => Vec::new(),
            },
            z_edges,
            provenance: res.provenance,
            direction: res.side,
            level: res.level,
        };
        if let Some(g) = &g {
            if self.config.verify {
                // Translate workspace edges back to edges of `g` for the check.
                if self.mode == Mode::Edge {
                    let mut local = std::collections::HashMap::new();
                    for (i, &e) in edge_map.iter().enumerate() {
                        local.insert(e, i);
                    }
                    res.z = res.z.iter().map(|e| local[e]).collect();
                }
                self.verify(g, &res, i_star, &record);
            }
        }
        self.counters.splits += 1;
        self.note(TraceEvent::Split {
            n,
            level: res.level,
            s: res.s.len(),
            z: res.z.len(),
            provenance: res.provenance,
            direction: res.side,
        });
        if self.config.record_splits {
            self.splits.push(record);
        }
        let (inside, rest) = match self.mode {
            Mode::Edge => ws.split_edge(task, &res.s),
            Mode::Vertex => ws.split_vertex(task, &res.s, &res.z),
        };
        vec![rest, inside]
    }

    fn verify(&mut self, g: &Graph, res: &IsolationResult, i_star: usize, record: &SplitRecord) {
        let (k, mode) = (self.k, self.mode);
        let mut flag = |kind| self.violations.push(Violation { kind, split: record.clone() });
        if i_star > 1 {
            let bound = (1i64 << (i_star - 1)) - k as i64 + 2;
            if (res.s.len() as i64) <= bound {
                flag(ViolationKind::SizeBound);
            }
        }
        let blocked = match mode {
            Mode::Vertex => {
                let mut b = mask(g.n(), &res.s);
                res.z.iter().for_each(|&z| b[z] = true);
                b
            }
            Mode::Edge => mask(g.n(), &res.s),
        };
        let outside: Vec<VertexId> = (0..g.n()).filter(|&v| !blocked[v]).collect();
        if outside.is_empty() {
            flag(ViolationKind::EmptyRemainder);
        }
        if !check_isolation(g, res, k, mode) {
            flag(ViolationKind::Isolation);
        }
        if g.n() <= 40 && !outside.is_empty() {
            for _ in 0..20 {
                let u = outside[self.rng.gen_range(0..outside.len())];
                let v = res.s[self.rng.gen_range(0..res.s.len())];
                if pairwise_k_connected(g, u, v, k, mode) {
                    self.violations.push(Violation { kind: ViolationKind::CrossConnectivity, split: record.clone() });
                    break;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn small_examples() {
        let sets = |g: &Graph, k, mode| kscc(g, k, mode).unwrap().vertex_sets();
        assert_eq!(sets(&fixtures::bitri(), 2, Mode::Edge), vec![vec![0, 1, 2]]);
        assert_eq!(sets(&fixtures::path(3), 2, Mode::Edge), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(sets(&fixtures::bowtie(), 2, Mode::Vertex), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(sets(&fixtures::k4b(), 3, Mode::Edge), vec![vec![0, 1, 2, 3]]);
        assert_eq!(sets(&fixtures::k4b(), 3, Mode::Vertex), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn recursion_without_base_case_matches() {
        let config = KsccConfig { base_case: BaseCase::AtMost(1), verify: true, ..KsccConfig::default() };
        for (g, k, mode) in [
            (fixtures::bowtie(), 2, Mode::Vertex),
            (fixtures::bowtie(), 2, Mode::Edge),
            (fixtures::two_cycle_bridge(), 2, Mode::Edge),
            (fixtures::complete(5), 3, Mode::Vertex),
            (fixtures::complete(5), 4, Mode::Edge),
        ] {
            let run = kscc_with(&g, k, mode, &config).unwrap();
            assert!(run.violations.is_empty(), "{:?}", run.violations);
            assert_eq!(run.components, kscc(&g, k, mode).unwrap());
        }
    }
}
