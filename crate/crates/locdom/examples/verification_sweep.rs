//! Runs the exhaustive verification suites over all connected graphs of
//! small order and prints one summary line per suite, plus the JSON and
//! CSV report forms for one of them.
//!
//! Run with: cargo run --release --example verification_sweep

use locdom::verify::{
    suite_assoc_properties, suite_bipartite_gap, suite_complement_gap, suite_families,
    suite_global_bounds, suite_global_symmetry, Universe, VerificationReport,
};
use locdom::Result;

fn main() -> Result<()> {
    let connected = Universe::connected_up_to(6);
    let bipartite = Universe::bipartite_up_to(7);

    let reports = [
        suite_complement_gap(&connected)?,
        suite_global_bounds(&connected)?,
        suite_global_symmetry(&connected)?,
        suite_families(2, 12)?,
        suite_bipartite_gap(&bipartite)?,
        suite_assoc_properties(&Universe::connected_up_to(5), 50, 1)?,
    ];
    for r in &reports {
        println!("{}", r.summary_line());
        assert!(r.passed());
    }

    let json = reports[0].to_json();
    println!("\nJSON report:\n{json}");
    let round_trip = VerificationReport::from_json(&json)?;
    print!("\nCSV report:\n{}", round_trip.to_csv());
    Ok(())
}
