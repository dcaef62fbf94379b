//! Dominator trees and the flow graphs built from blue vertices.
//!
//! Run with `cargo run --example dominators`.

use kscc::level::{level_subgraph, make_flow_graphs, Direction, RootedFlowGraph};
use kscc::primitives::{dominator_vertices, edge_dominator, DominatorTree};
use kscc::{fixtures, Graph, Mode};

fn main() {
    // 0 -> 1 -> 2 -> 3 with a shortcut 0 -> 2: only 2 dominates 3.
    let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
    let tree = DominatorTree::new(&g, 0);
    for v in 1..4 {
        println!("idom({v}) = {:?}", tree.idom(v));
    }
    let fg = RootedFlowGraph::new(g.clone(), 0);
    println!("dominators (dominator, witness): {:?}", dominator_vertices(&fg));
    println!("edge dominator: {:?}", edge_dominator(&fg).map(|e| g.edge(e)));

    // At level 1 every vertex of the bowtie that has more than two
    // in-edges is blue; the flow graphs hang the blue vertices off a root.
    let bowtie = fixtures::bowtie();
    let ls = level_subgraph(&bowtie, 1, Direction::Forward).unwrap();
    println!("blue at level 1: {:?}", ls.blue_vertices());
    for mode in [Mode::Edge, Mode::Vertex] {
        for fg in make_flow_graphs(&ls, 2, mode).unwrap() {
            println!(
                "{mode}: {:?} root {} with {} vertices, {} edges",
                fg.kind,
                fg.root,
                fg.graph.n(),
                fg.graph.m()
            );
        }
    }
}
