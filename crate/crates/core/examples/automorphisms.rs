//! Automorphism groups: generators, order, and orbits.

use z4census::autgroup::automorphism_group;
use z4census::graph::named;
use z4census::graph6;
use z4census::perm::group_order;

fn main() -> z4census::Result<()> {
    let arg = std::env::args().nth(1);
    let g = match &arg {
        Some(s) => graph6::decode(s.as_bytes())?,
        None => named::petersen(),
    };
    let a = automorphism_group(&g);
    println!("graph {}", graph6::encode_string(&g));
    println!("|Aut| = {}", a.order);
    for p in &a.generators {
        println!("  generator {p}");
    }
    // the stabiliser chain recomputes the order from the generators alone
    assert_eq!(group_order(&a.generators, g.n())?, a.order);
    let orbit = |o: &Vec<usize>| o.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    println!("vertex orbits: {}", a.vertex_orbits.iter().map(|o| format!("{{{}}}", orbit(o))).collect::<Vec<_>>().join(" "));
    println!("edge orbits: {}", a.edge_orbits.len());
    Ok(())
}
