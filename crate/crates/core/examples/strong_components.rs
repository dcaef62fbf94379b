//! SCCs, strong bridges and strong articulation points of a small graph.
//!
//! Run with `cargo run --example strong_components`.

use kscc::fixtures;
use kscc::primitives::{scc, strong_articulation_points, strong_bridges, top_scc};

fn main() {
    // Two directed triangles joined by 2 -> 3 and 5 -> 0.
    let g = fixtures::two_cycle_bridge();
    let p = scc(&g);
    println!("{} SCC(s): {:?}", p.len(), p.components);

    let cut = g.without_edges(&[7]).graph;
    let q = scc(&cut);
    println!("without 5->0: {:?}, top {:?}", q.components, top_scc(&cut));

    let bridges: Vec<_> = strong_bridges(&g).into_iter().map(|e| g.edge(e)).collect();
    println!("strong bridges: {bridges:?}");

    let bowtie = fixtures::bowtie();
    println!("bowtie articulation points: {:?}", strong_articulation_points(&bowtie));
}
