//! k-edge and k-vertex strongly connected components, with per-split
//! re-checks and work counters.
//!
//! Run with `cargo run --example k_components [n] [p] [seed]`.

use kscc::generate::{gen_adversarial_chain, gen_random};
use kscc::{kscc, kscc_with, BaseCase, KsccConfig, Mode};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().and_then(|s| s.parse().ok()).unwrap_or(40);
    let p = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(0.15);
    let seed = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(1);

    let chain = gen_adversarial_chain(4, 3).unwrap();
    print!("chain of 4 triangles, k=2 vertex:\n{}", kscc(&chain, 2, Mode::Vertex).unwrap().to_text());

    let g = gen_random(n, p, seed).unwrap();
    println!("random graph: n = {}, m = {}", g.n(), g.m());
    let config = KsccConfig { base_case: BaseCase::AtMost(1), verify: true, ..KsccConfig::default() };
    for mode in [Mode::Edge, Mode::Vertex] {
        for k in 2..=4 {
            let run = kscc_with(&g, k, mode, &config).unwrap();
            let sizes: Vec<usize> = run.components.components.iter().map(|c| c.vertices.len()).filter(|&s| s > 1).collect();
            println!(
                "k={k} {mode}: {} components, nontrivial sizes {sizes:?}, {} splits, {} level scans, {} violations",
                run.components.len(),
                run.counters.splits,
                run.counters.level_edges_scanned,
                run.violations.len()
            );
        }
    }
}
