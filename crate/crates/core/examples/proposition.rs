//! Runs the census and checks each numbered statement against the measured
//! invariants. Pass `--json` for the full report.

use z4census::enumerate::{enumerate_family, ScanConfig};
use z4census::perm::CycleType;
use z4census::report::build_report;

fn main() -> z4census::Result<()> {
    let cfg = ScanConfig { cycle_types: Some(vec![CycleType::new(vec![4, 4, 2])]), ..ScanConfig::default() };
    let report = build_report(&enumerate_family(&cfg)?)?;
    if std::env::args().any(|a| a == "--json") {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.summary());
    }
    std::process::exit(report.exit_code());
}
