//! Decomposition results and their canonical form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::graph::{Graph, VertexId};

/// Whether connectivity counts edge-disjoint or vertex-disjoint paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Edge,
    Vertex,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Edge => "edge",
            Mode::Vertex => "vertex",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "edge" => Ok(Mode::Edge),
            "vertex" => Ok(Mode::Vertex),
            other => Err(Error::Parse { line: 0, message: format!("unknown mode `{other}`") }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    /// Induced edges; only filled in vertex mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(VertexId, VertexId)>>,
    /// Vertex-mode component with fewer than three vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSet {
    pub mode: Mode,
    pub k: usize,
    pub components: Vec<Component>,
}

impl ComponentSet {
    /// Canonical result from raw vertex sets over `g`.
    ///
    /// Sets contained in another set are dropped: the recursion can emit a
    /// separator vertex on its own after the component it belongs to has
    /// already been reported with it.
    pub fn from_vertex_sets(g: &Graph, k: usize, mode: Mode, sets: Vec<Vec<VertexId>>) -> Self {
        let mut sets: Vec<Vec<VertexId>> = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .filter(|s| !s.is_empty())
            .collect();
        sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<Vec<VertexId>> = Vec::with_capacity(sets.len());
        let mut containing: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for s in sets {
            // A subset of a kept set shares every member with it; checking the
            // kept sets through the first member is enough.
            let covered = containing[s[0]].iter().any(|&i| {
                let big: &Vec<VertexId> = &kept[i];
                s.iter().all(|v| big.binary_search(v).is_ok())
            });
            if covered {
                continue;
            }
            for &v in &s {
                containing[v].push(kept.len());
            }
            kept.push(s);
        }
        kept.sort_unstable();
        let mut scratch = vec![false; g.n()];
        let components = kept
            .into_iter()
            .map(|vertices| match mode {
                Mode::Edge => Component { vertices, edges: None, degenerate: None },
                Mode::Vertex => {
                    let edges = induced_edges(g, &vertices, &mut scratch);
                    let degenerate = Some(vertices.len() < 3);
                    Component { vertices, edges: Some(edges), degenerate }
                }
            })
            .collect();
        ComponentSet { mode, k, components }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn vertex_sets(&self) -> Vec<Vec<VertexId>> {
        self.components.iter().map(|c| c.vertices.clone()).collect()
    }

    /// Same components with degenerate ones removed.
    pub fn without_degenerate(&self) -> ComponentSet {
        ComponentSet {
            mode: self.mode,
            k: self.k,
            components: self
                .components
                .iter()
                .filter(|c| c.degenerate != Some(true))
                .cloned()
                .collect(),
        }
    }

    /// One line per component: sorted vertex ids; in vertex mode followed by
    /// `| u->v ...` and a trailing `| degenerate` marker where it applies.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.components {
            out.push_str(&join(c.vertices.iter()));
            if let Some(edges) = &c.edges {
                out.push_str(" |");
                for (u, v) in edges {
                    out.push_str(&format!(" {u}->{v}"));
                }
                if c.degenerate == Some(true) {
                    out.push_str(" | degenerate");
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("component sets serialize")
    }

    /// SHA-256 of the mode, order, and canonical text, hex encoded.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{} {}\n", self.mode, self.k));
        h.update(self.to_text());
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn join<'a>(it: impl Iterator<Item = &'a VertexId>) -> String {
    it.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn induced_edges(g: &Graph, vs: &[VertexId], scratch: &mut [bool]) -> Vec<(VertexId, VertexId)> {
    scratch.iter_mut().for_each(|x| *x = false);
    vs.iter().for_each(|&v| scratch[v] = true);
    let mut edges: Vec<_> = vs
        .iter()
        .flat_map(|&u| g.successors(u).filter(|&w| scratch[w]).map(move |w| (u, w)))
        .collect();
    edges.sort_unstable();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn drops_contained_sets() {
        let g = fixtures::bowtie();
        let cs = ComponentSet::from_vertex_sets(
            &g,
            2,
            Mode::Vertex,
            vec![vec![2], vec![4, 3, 2], vec![0, 1, 2], vec![2, 3, 4]],
        );
        assert_eq!(cs.vertex_sets(), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert!(cs.components.iter().all(|c| c.edges.as_ref().unwrap().len() == 6));
        assert!(cs.components.iter().all(|c| c.degenerate == Some(false)));
    }

    #[test]
    fn text_formats() {
        let g = fixtures::bitri();
        let cs = ComponentSet::from_vertex_sets(&g, 2, Mode::Edge, vec![vec![2, 0, 1]]);
        assert_eq!(cs.to_text(), "0 1 2\n");
        let p = fixtures::path(2);
        let cs = ComponentSet::from_vertex_sets(&p, 2, Mode::Vertex, vec![vec![0], vec![1]]);
        assert_eq!(cs.to_text(), "0 | | degenerate\n1 | | degenerate\n");
        assert!(cs.without_degenerate().is_empty());
        let empty = ComponentSet::from_vertex_sets(&Graph::empty(0), 2, Mode::Edge, vec![]);
        assert_eq!(empty.to_text(), "");
    }

    #[test]
    fn digest_depends_on_content() {
        let g = fixtures::path(3);
        let a = ComponentSet::from_vertex_sets(&g, 2, Mode::Edge, vec![vec![0], vec![1], vec![2]]);
        let b = ComponentSet::from_vertex_sets(&g, 2, Mode::Edge, vec![vec![2], vec![0], vec![1]]);
        let c = ComponentSet::from_vertex_sets(&g, 3, Mode::Edge, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(a.digest(), b.digest());
        assert_ne!(a.digest(), c.digest());
        assert_eq!(a.digest().len(), 64);
    }
}
