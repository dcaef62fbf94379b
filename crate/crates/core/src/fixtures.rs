//! Small named graphs used throughout the tests and examples.

use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).expect("fixture graphs are simple")
}

/// Directed 3-cycle 0 -> 1 -> 2 -> 0.
pub fn c3() -> Graph {
    build(3, &[(0, 1), (1, 2), (2, 0)])
}

/// Bidirectional triangle.
pub fn bitri() -> Graph {
    build(3, &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)])
}

/// Two bidirectional triangles sharing vertex 2.
pub fn bowtie() -> Graph {
    build(
        5,
        &[
            (0, 1),
            (0, 2),
            (1, 0),
            (1, 2),
            (2, 0),
            (2, 1),
            (2, 3),
            (2, 4),
            (3, 2),
            (3, 4),
            (4, 2),
            (4, 3),
        ],
    )
}

/// Two 3-cycles {0,1,2} and {3,4,5} joined by 2 -> 3 and 5 -> 0.
pub fn two_cycle_bridge() -> Graph {
    build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3), (5, 0)])
}

/// Bidirectional complete graph on 4 vertices.
pub fn k4b() -> Graph {
    complete(4)
}

/// Bidirectional complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph is simple")
}

/// Directed path 0 -> 1 -> ... -> n-1.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
}

/// Diamond 0 -> {1, 2} -> 3.
pub fn diamond() -> Graph {
    build(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
}
