//! Full invariant profile of a graph given as graph6 (default: Petersen).

use z4census::graph::named;
use z4census::graph6;
use z4census::invariants::{kuratowski_minor, profile};
use z4census::report::profile_table;

fn main() -> z4census::Result<()> {
    let graphs: Vec<_> = match std::env::args().skip(1).collect::<Vec<_>>() {
        args if args.is_empty() => vec![named::petersen(), named::complete(4), named::cycle(5)],
        args => args.iter().map(|s| graph6::decode(s.as_bytes())).collect::<z4census::Result<_>>()?,
    };
    let mut rows = Vec::new();
    for g in &graphs {
        let p = profile(g)?;
        if !p.planar {
            if let Some((k, _)) = kuratowski_minor(g) {
                println!("{}: nonplanar, {k:?} minor", graph6::encode_string(g));
            }
        }
        rows.push((graph6::encode_string(g), p));
    }
    print!("{}", profile_table(&rows));
    println!("{}", serde_json::to_string_pretty(&rows[0].1).expect("profile serialises"));
    Ok(())
}
