//! Instrumented runs over generated instances; every algorithm's digest
//! must match on every instance.
//!
//! Run with `cargo run --release --example bench`.

use kscc::bench::{bench_run, Algorithm, BenchConfig, GeneratorSpec};
use kscc::Mode;

fn main() {
    let config = BenchConfig {
        generator: GeneratorSpec::Random { p: 0.1 },
        algorithms: vec![Algorithm::Kscc, Algorithm::Naive, Algorithm::Sparse2e],
        sizes: vec![50, 100, 200],
        seeds: (0..3).collect(),
        k: 2,
        mode: Mode::Edge,
        timing: true,
    };
    for r in bench_run(&config).unwrap() {
        println!(
            "{:<9} {:<16} seed {} n={:<4} m={:<6} {:>8.2} ms  scans {:<8} flows {:<6} balls {:<6} components {}",
            r.algorithm.to_string(),
            r.instance,
            r.seed,
            r.n,
            r.m,
            r.wall_ms.unwrap_or(0.0),
            r.counters.level_edges_scanned,
            r.counters.flow_augmentations,
            r.counters.ball_edges,
            r.components
        );
    }
}
