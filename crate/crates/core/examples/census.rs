use std::time::Instant;

use z4census::enumerate::{complement_pairs, enumerate_family, verify_structure_claim, ScanConfig};
use z4census::perm::CycleType;

fn main() -> z4census::Result<()> {
    let all = std::env::args().any(|a| a == "--all");
    let cfg = ScanConfig {
        cycle_types: if all { None } else { Some(vec![CycleType::new(vec![4, 4, 2])]) },
        ..ScanConfig::default()
    };
    let t = Instant::now();
    let family = enumerate_family(&cfg)?;
    println!("{} classes in {:.2?}", family.classes.len(), t.elapsed());
    for (ty, count) in &family.per_cycle_type_counts {
        println!("  cycle type ({ty}): {count}");
    }
    for c in &family.classes {
        println!("  {}  edges={}", c.canonical, c.witness.edge_count());
    }
    println!("complement pairs: {:?}", complement_pairs(&family)?);
    let s = verify_structure_claim(&family)?;
    println!("structure claim verified: {} (common cross pattern {:?})", s.verified, s.common_cross_pattern);
    for z in &s.classes {
        println!("  {} {} ({} cross patterns)", z.canonical, z.pattern, z.cross_patterns);
    }
    Ok(())
}
