//! Work counters and structured trace events.

use std::cell::Cell;

use serde::Serialize;

use crate::level::Direction;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WorkCounters {
    /// Adjacency entries scanned while building level subgraphs, stale
    /// entries included, plus edges of whole-graph searches.
    pub level_edges_scanned: u64,
    /// Augmenting paths found by capped flow computations.
    pub flow_augmentations: u64,
    /// Edges inspected by bounded local searches.
    pub ball_edges: u64,
    /// Splits performed by the recursion or the local search.
    pub splits: u64,
    /// Subproblems handed to the naive base case.
    pub base_cases: u64,
}

impl WorkCounters {
    pub fn add(&mut self, other: &WorkCounters) {
        self.level_edges_scanned += other.level_edges_scanned;
        self.flow_augmentations += other.flow_augmentations;
        self.ball_edges += other.ball_edges;
        self.splits += other.splits;
        self.base_cases += other.base_cases;
    }
}

/// Where an isolated set came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Tscc,
    Dominator,
    BlueSingletonSpecial,
    BlueSupersetSpecial,
    WholeGraph,
}

/// Branch taken by a successful local search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalBranch {
    Tscc,
    Bridge,
    Dominator,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "event", rename_all = "kebab-case")]
pub enum TraceEvent {
    Level {
        n: usize,
        level: usize,
        blue_forward: usize,
        blue_reverse: usize,
        found: Option<Provenance>,
        direction: Option<Direction>,
    },
    WholeGraph {
        n: usize,
        m: usize,
        found: Option<Provenance>,
    },
    Split {
        n: usize,
        level: Option<usize>,
        s: usize,
        z: usize,
        provenance: Provenance,
        direction: Direction,
    },
    BaseCase {
        n: usize,
    },
    Outer {
        iteration: usize,
        j: usize,
        bridges: usize,
    },
    Local {
        j: usize,
        ball: usize,
        branch: LocalBranch,
        s: usize,
    },
}

impl TraceEvent {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("trace events serialize")
    }
}

thread_local! {
    static AUGMENTATIONS: Cell<u64> = const { Cell::new(0) };
}

/// Instrumentation hook for the flow code; per thread so concurrent runs do
/// not mix their counts.
pub(crate) fn note_augmentations(k: usize) {
    AUGMENTATIONS.with(|c| c.set(c.get() + k as u64));
}

pub(crate) fn augmentations() -> u64 {
    AUGMENTATIONS.with(Cell::get)
}
