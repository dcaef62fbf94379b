use proptest::prelude::*;

use kscc::io::{parse_str, write_edgelist, Format};
use kscc::oracle::pairwise_k_connected;
use kscc::{kscc, kscc_with, BaseCase, Graph, KsccConfig, Mode};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1)).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Edge), Just(Mode::Vertex)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_components_partition_vertices(g in graph(14), k in 2usize..5) {
        let cs = kscc(&g, k, Mode::Edge).unwrap();
        let mut seen = vec![0; g.n()];
        for c in &cs.components {
            for &v in &c.vertices {
                seen[v] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&x| x == 1));
    }

    #[test]
    fn two_vertex_components_share_no_edge(g in graph(14)) {
        let cs = kscc(&g, 2, Mode::Vertex).unwrap();
        let mut edges: Vec<(usize, usize)> = cs.components.iter().flat_map(|c| c.edges.clone().unwrap()).collect();
        let total = edges.len();
        edges.sort_unstable();
        edges.dedup();
        prop_assert_eq!(edges.len(), total);
        let mut covered = vec![false; g.n()];
        cs.components.iter().flat_map(|c| &c.vertices).for_each(|&v| covered[v] = true);
        prop_assert!(covered.iter().all(|&c| c));
    }

    #[test]
    fn components_are_internally_k_connected(g in graph(12), k in 2usize..4, mode in mode()) {
        for c in kscc(&g, k, mode).unwrap().components {
            let h = g.induced_subgraph(&c.vertices).graph;
            for u in 0..h.n() {
                for v in u + 1..h.n() {
                    prop_assert!(pairwise_k_connected(&h, u, v, k, mode));
                }
            }
        }
    }

    #[test]
    fn reversal_keeps_components(g in graph(14), k in 2usize..4, mode in mode()) {
        let a = kscc(&g, k, mode).unwrap().vertex_sets();
        let b = kscc(&g.reverse(), k, mode).unwrap().vertex_sets();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn higher_order_refines(g in graph(14), k in 2usize..4) {
        let coarse = kscc(&g, k, Mode::Edge).unwrap();
        let fine = kscc(&g, k + 1, Mode::Edge).unwrap();
        for c in &fine.components {
            prop_assert!(coarse.components.iter().any(|big| c.vertices.iter().all(|v| big.vertices.contains(v))));
        }
    }

    #[test]
    fn base_case_size_does_not_matter(g in graph(16), k in 2usize..5, mode in mode(), t in 1usize..10) {
        let config = KsccConfig { base_case: BaseCase::AtMost(t), ..KsccConfig::default() };
        prop_assert_eq!(kscc_with(&g, k, mode, &config).unwrap().components, kscc(&g, k, mode).unwrap());
    }

    #[test]
    fn edgelist_round_trip(g in graph(12)) {
        let text = write_edgelist(&g);
        let back = parse_str(&text, Format::EdgeList).unwrap();
        prop_assert_eq!(write_edgelist(&back), text);
        prop_assert_eq!(back, g);
    }
}
