//! Searching sparse level subgraphs for isolated sets before touching the
//! whole graph.
//!
//! Run with `cargo run --example level_search`.

use kscc::hierarchical::{check_isolation, k_isolated_set, k_isolated_set_level};
use kscc::{Graph, Mode};

fn main() {
    // A complete digraph on 0..8 and a 2-cycle {8, 9} that 0 feeds into.
    let mut edges: Vec<(usize, usize)> =
        (0..8).flat_map(|u| (0..8).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    edges.extend([(0, 8), (8, 9), (9, 8), (9, 0)]);
    let g = Graph::new(10, edges).unwrap();
    let bound = g.degree_bound();
    println!("gamma = {}, levels 1..{}", bound.gamma, bound.ceil_log());

    let mut i = 1;
    while bound.admits_level(i) {
        match k_isolated_set_level(&g, i, 2, Mode::Edge).unwrap() {
            Some(r) => {
                let z: Vec<_> = r.z.iter().map(|&e| g.edge(e)).collect();
                println!("level {i}: S = {:?}, Z = {z:?} via {:?} on the {:?} side", r.s, r.provenance, r.side);
                println!("  isolation holds: {}", check_isolation(&g, &r, 2, Mode::Edge));
                break;
            }
            None => println!("level {i}: nothing"),
        }
        i += 1;
    }

    // The whole-graph search finds the same kind of set, at full cost.
    let r = k_isolated_set(&g, 2, Mode::Edge).unwrap().unwrap();
    println!("whole graph: S = {:?} via {:?}", r.s, r.provenance);
}
