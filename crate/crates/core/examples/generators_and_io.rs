//! Generators, file formats and canonical output.
//!
//! Run with `cargo run --example generators_and_io`.

use kscc::generate::{gen_adversarial_chain, gen_blocks_vs_components, gen_random};
use kscc::io::{emit_components, parse_str, write_edgelist, Format, OutputFormat};
use kscc::{fixtures, kscc, Mode};

fn main() {
    let g = gen_random(6, 0.3, 42).unwrap();
    let text = write_edgelist(&g);
    print!("edge list:\n{text}");
    assert_eq!(parse_str(&text, Format::EdgeList).unwrap(), g);

    let c3 = parse_str("p sp 3 3\na 1 2\na 2 3\na 3 1\n", Format::Dimacs).unwrap();
    println!("DIMACS triangle edges: {:?}", c3.edges());

    let aug = gen_blocks_vs_components(&fixtures::c3());
    println!("triangle with the four-vertex gadget: n = {}, m = {}", aug.n(), aug.m());

    let chain = gen_adversarial_chain(3, 3).unwrap();
    let cs = kscc(&chain, 2, Mode::Vertex).unwrap();
    print!("{}", emit_components(&cs, OutputFormat::Text));
    print!("{}", emit_components(&cs, OutputFormat::Json));
    println!("digest {}", cs.digest());
}
