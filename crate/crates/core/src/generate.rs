//! Seeded and structured graph generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Each ordered pair `(u, v)`, `u != v`, independently with probability `p`.
/// Pairs are drawn with `u` major, `v` minor from a ChaCha8 stream seeded
/// with `seed`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Adds `s1 = n, t1 = n + 1, s2 = n + 2, t2 = n + 3` with edges `s1 -> t1`,
/// `s2 -> t2` and `v -> s1, v -> s2, t1 -> v, t2 -> v` for every original
/// `v`. Every original pair gets two edge-disjoint paths through the new
/// vertices while the 2-edge components stay as they were, plus four
/// singletons.
pub fn gen_blocks_vs_components(g: &Graph) -> Graph {
    let n = g.n();
    let (s1, t1, s2, t2) = (n, n + 1, n + 2, n + 3);
    let mut edges = g.edges().to_vec();
    edges.push((s1, t1));
    edges.push((s2, t2));
    for v in 0..n {
        edges.extend([(v, s1), (v, s2), (t1, v), (t2, v)]);
    }
    Graph::new(n + 4, edges).expect("fresh vertices add no duplicates")
}

/// `c` complete digraphs on `b` vertices in a row; block `j` and block
/// `j + 1` share exactly one vertex.
pub fn gen_adversarial_chain(c: usize, b: usize) -> Result<Graph> {
    if c < 2 || b < 3 {
        return Err(Error::InvalidGenerator(format!("chain needs c >= 2 and b >= 3, got c = {c}, b = {b}")));
    }
    let n = c * (b - 1) + 1;
    let mut edges = Vec::new();
    for j in 0..c {
        let block: Vec<VertexId> = (j * (b - 1)..=j * (b - 1) + b - 1).collect();
        for &u in &block {
            for &v in &block {
                if u != v {
                    edges.push((u, v));
                }
            }
        }
    }
    edges.sort_unstable();
    Graph::new(n, edges)
}
