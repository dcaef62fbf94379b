//! The slow reference algorithms and pairwise connectivity queries.
//!
//! Run with `cargo run --example oracles`.

use kscc::generate::gen_random;
use kscc::oracle::{brute_force_kscc, naive_kscc, pairwise_k_connected, pairwise_k_connected_by_removal};
use kscc::{fixtures, kscc, Mode};

fn main() {
    let bowtie = fixtures::bowtie();
    println!(
        "bowtie 0~3, k=2 vertex: flow {}, removal {}",
        pairwise_k_connected(&bowtie, 0, 3, 2, Mode::Vertex),
        pairwise_k_connected_by_removal(&bowtie, 0, 3, 2, Mode::Vertex)
    );

    let mut agree = 0;
    for seed in 0..50 {
        let g = gen_random(8, 0.45, seed).unwrap();
        for mode in [Mode::Edge, Mode::Vertex] {
            let brute = brute_force_kscc(&g, 2, mode).unwrap();
            if brute == naive_kscc(&g, 2, mode).unwrap() && brute == kscc(&g, 2, mode).unwrap() {
                agree += 1;
            }
        }
    }
    println!("{agree}/100 random cases agree across brute force, naive and kscc");
}
