//! The two census members described individually: the planar one and the
//! one with fewest edges.

use z4census::enumerate::{enumerate_family, ScanConfig};
use z4census::invariants::core::core_with_retraction;
use z4census::invariants::planarity::planarity;
use z4census::invariants::{char_poly, is_planar};
use z4census::perm::CycleType;
use z4census::report::planar_member_char_poly;

fn main() -> z4census::Result<()> {
    let cfg = ScanConfig { cycle_types: Some(vec![CycleType::new(vec![4, 4, 2])]), ..ScanConfig::default() };
    let family = enumerate_family(&cfg)?;

    let planar: Vec<_> = family.classes.iter().filter(|c| is_planar(&c.witness)).collect();
    assert_eq!(planar.len(), 1);
    let g1 = planar[0];
    println!("planar member {} (generator {})", g1.canonical, g1.generator);
    let rot = planarity(&g1.witness).rotation.expect("planar");
    for (v, r) in rot.iter().enumerate() {
        println!("  rotation at {}: {:?}", v + 1, r.iter().map(|u| u + 1).collect::<Vec<_>>());
    }
    let core = core_with_retraction(&g1.witness);
    println!("  core on vertices {:?}", core.vertices.iter().map(|v| v + 1).collect::<Vec<_>>());
    let p = char_poly(&g1.witness)?;
    println!("  characteristic polynomial {p}");
    println!("  equals (x^2-2)^2 (x^3-2x^2-8x-4)(x^3+2x^2-4x-4): {}", p == planar_member_char_poly());

    let g2 = family.classes.iter().min_by_key(|c| c.witness.edge_count()).expect("nonempty census");
    let core2 = core_with_retraction(&g2.witness);
    println!(
        "fewest edges: {} with {} edges, core order {} of {}",
        g2.canonical,
        g2.witness.edge_count(),
        core2.core.n(),
        g2.witness.n()
    );
    Ok(())
}
