//! graph6 and edge-list round trips, strict and lenient decoding.

use z4census::graph::named;
use z4census::graph6::{self, Strictness};
use z4census::{edgelist, Graph};

fn main() -> z4census::Result<()> {
    let g = named::petersen();
    let g6 = graph6::encode_string(&g);
    println!("Petersen graph6: {g6}");
    println!("as an edge list: {}", edgelist::format(&g));
    assert_eq!(graph6::decode(g6.as_bytes())?, g);

    for s in ["A_", "A?", "C~"] {
        let h = graph6::decode(s.as_bytes())?;
        println!("{s:>3} -> {}", edgelist::format(&h));
    }

    // "A`" sets a padding bit: rejected unless lenient
    println!("strict  A`: {:?}", graph6::decode(b"A`").err());
    println!("lenient A`: {}", edgelist::format(&graph6::decode_with(b"A`", Strictness::Lenient)?));

    let back: Graph = edgelist::parse("5 : 1-2 2-3 3-4 4-5 5-1")?;
    println!("C5 from an edge list: {}", graph6::encode_string(&back));
    Ok(())
}
