//! Canonical forms and isomorphism testing.

use rand::seq::SliceRandom;
use rand::SeedableRng;

use z4census::autgroup::{are_isomorphic, canonical_string};
use z4census::graph::named;
use z4census::{Graph, Permutation};

fn main() -> z4census::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let g = named::petersen();
    let canon = canonical_string(&g);
    println!("canonical Petersen: {canon}");
    for _ in 0..5 {
        let mut img: Vec<usize> = (0..g.n()).collect();
        img.shuffle(&mut rng);
        let h = g.relabel(&Permutation::from_images(img)?)?;
        println!("  relabeled {} -> {}", z4census::graph6::encode_string(&h), canonical_string(&h));
        assert_eq!(canonical_string(&h), canon);
    }

    let c6 = named::cycle(6);
    let two_k3 = named::complete(3).disjoint_union(&named::complete(3))?;
    println!("C6 vs 2K3: {}", verdict(&c6, &two_k3));
    println!("C6 vs its relabeling: {}", verdict(&c6, &c6.relabel(&Permutation::parse_cycles("(1,3,5)", 6)?)?));
    Ok(())
}

fn verdict(a: &Graph, b: &Graph) -> &'static str {
    if are_isomorphic(a, b) {
        "isomorphic"
    } else {
        "non-isomorphic"
    }
}
