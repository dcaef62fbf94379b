//! The local-search 2-edge algorithm against the recursion and the naive
//! algorithm, plus the degree transform it relies on.

use kscc::generate::{gen_blocks_vs_components, gen_random};
use kscc::graph::Graph;
use kscc::local::{two_escc_sparse_with, two_isolated_set_local, two_isolated_set_local_traced, SparseConfig};
use kscc::oracle::naive_kscc;
use kscc::trace::{LocalBranch, TraceEvent};
use kscc::transform::{constant_degree_transform, max_degree, project_components};
use kscc::{kscc, two_escc_sparse, ComponentSet, Mode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn naive2(g: &Graph) -> ComponentSet {
    naive_kscc(g, 2, Mode::Edge).unwrap()
}

#[test]
fn transform_preserves_two_edge_components() {
    for seed in 0..200 {
        let n = 2 + (seed as usize % 39);
        let g = gen_random(n, [0.05, 0.1, 0.2][seed as usize % 3], 500 + seed).unwrap();
        let (h, map) = constant_degree_transform(&g);
        assert!(max_degree(&h) <= 3);
        let projected = project_components(&map, &naive2(&h), &g).unwrap();
        assert_eq!(projected, naive2(&g), "seed {seed}");
    }
}

#[test]
fn matches_naive_and_recursion() {
    let mut branches = std::collections::HashSet::new();
    for seed in 0..120 {
        let n = 5 + (seed as usize % 50);
        let p = [0.04, 0.08, 0.15, 0.3][seed as usize % 4];
        let g = gen_random(n, p, seed).unwrap();
        let run = two_escc_sparse_with(&g, &SparseConfig { verify: true, trace: true, ..SparseConfig::default() })
            .unwrap();
        assert!(run.violations.is_empty(), "seed {seed}: {:?}", run.violations);
        let expected = naive2(&g);
        assert_eq!(run.components, expected, "seed {seed}");
        assert_eq!(kscc(&g, 2, Mode::Edge).unwrap(), expected, "seed {seed}");
        for ev in &run.trace {
            if let TraceEvent::Local { branch, .. } = ev {
                branches.insert(*branch);
            }
        }
    }
    assert!(branches.contains(&LocalBranch::Tscc), "{branches:?}");
    assert!(branches.contains(&LocalBranch::Dominator), "{branches:?}");
}

#[test]
fn gadget_adds_four_singletons() {
    for seed in 0..20 {
        let g = gen_random(12, 0.25, seed).unwrap();
        let aug = gen_blocks_vs_components(&g);
        let mut expected = naive2(&g).vertex_sets();
        expected.extend((12..16).map(|v| vec![v]));
        expected.sort();
        assert_eq!(two_escc_sparse(&aug).vertex_sets(), expected, "seed {seed}");
    }
}

#[test]
fn epsilon_is_validated() {
    let g = gen_random(5, 0.5, 0).unwrap();
    for eps in [0.0, 1.0, -0.5, f64::NAN] {
        assert!(two_escc_sparse_with(&g, &SparseConfig { epsilon: eps, ..SparseConfig::default() }).is_err());
    }
    for eps in [0.1, 0.9] {
        let run = two_escc_sparse_with(&g, &SparseConfig { epsilon: eps, ..SparseConfig::default() }).unwrap();
        assert_eq!(run.components, naive2(&g));
    }
}

/// A bidirectional cycle of `big` vertices with a planted 2-cycle `{a, b}`
/// entered by one edge and left by one edge.
fn planted(big: usize, rng: &mut ChaCha8Rng) -> (Graph, usize) {
    let mut edges = Vec::new();
    for v in 0..big {
        edges.push((v, (v + 1) % big));
        edges.push(((v + 1) % big, v));
    }
    let (a, b) = (big, big + 1);
    edges.extend([(a, b), (b, a)]);
    let x = rng.gen_range(0..big);
    let y = (x + 1 + rng.gen_range(0..big - 1)) % big;
    edges.push((x, a));
    edges.push((b, y));
    (Graph::new(big + 2, edges).unwrap(), a)
}

#[test]
fn finds_planted_small_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let big = rng.gen_range(10..60);
        let (g, a) = planted(big, &mut rng);
        for d in 2..5 {
            let s = two_isolated_set_local(&g, &[a], d).unwrap();
            assert!(!s.is_empty(), "big={big} d={d}");
        }
    }
}

#[test]
fn two_edge_connected_input_gives_nothing() {
    let g = gen_random(8, 0.0, 0).unwrap();
    let mut edges = g.edges().to_vec();
    for v in 0..8 {
        edges.push((v, (v + 1) % 8));
        edges.push(((v + 1) % 8, v));
    }
    let ring = Graph::new(8, edges).unwrap();
    for d in 2..6 {
        let (s, trace) = two_isolated_set_local_traced(&ring, &[0, 3], d).unwrap();
        assert!(s.is_empty());
        assert!(trace.is_empty());
    }
}

#[test]
fn bridge_branch_on_closed_ball() {
    // The whole graph fits in the ball and nothing leaves it, so the search
    // falls back to a strong bridge inside the ball.
    let g = kscc::fixtures::two_cycle_bridge();
    let (s, trace) = two_isolated_set_local_traced(&g, &[0], 3).unwrap();
    assert!(!s.is_empty() && s.len() < 6);
    assert!(matches!(trace[0], TraceEvent::Local { branch: LocalBranch::Bridge, ball: 6, .. }));
}
