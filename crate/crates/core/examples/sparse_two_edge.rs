//! 2-edge strongly connected components by local search on the degree-3
//! expansion, compared with the recursive algorithm.
//!
//! Run with `cargo run --example sparse_two_edge [n] [p] [seed]`.

use kscc::generate::gen_random;
use kscc::local::{two_escc_sparse_with, SparseConfig};
use kscc::trace::TraceEvent;
use kscc::transform::{constant_degree_transform, max_degree};
use kscc::{kscc, Mode};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().and_then(|s| s.parse().ok()).unwrap_or(60);
    let p = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(0.06);
    let seed = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(4);

    let g = gen_random(n, p, seed).unwrap();
    let (h, _) = constant_degree_transform(&g);
    println!("input n = {}, m = {}; expanded n = {}, m = {}, max degree {}", g.n(), g.m(), h.n(), h.m(), max_degree(&h));

    let run = two_escc_sparse_with(&g, &SparseConfig { verify: true, trace: true, ..SparseConfig::default() }).unwrap();
    let local = run.trace.iter().filter(|e| matches!(e, TraceEvent::Local { .. })).count();
    println!("{} outer iterations, {local} local-search hits, {} ball edges", run.iterations, run.counters.ball_edges);
    for ev in run.trace.iter().take(8) {
        println!("  {}", ev.to_json_line());
    }
    let same = run.components == kscc(&g, 2, Mode::Edge).unwrap();
    println!("{} components, equal to the recursion: {same}", run.components.len());
}
