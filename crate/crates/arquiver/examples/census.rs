//! Commutation-class censuses across the small types: total classes, how
//! many are adapted to an orientation, and the elapsed time. The two big
//! cases run under the extended budget.
//!
//!     cargo run --release --example census

use std::time::Instant;

use arquiver::chamber;
use arquiver::words::CensusBudget;
use arquiver::{Result, RootSystem};

fn main() -> Result<()> {
    println!(
        "{:<5} {:>9} {:>9} {:>12} {:>10}",
        "type", "classes", "adapted", "conjecture", "time"
    );
    for (name, extended) in [
        ("A2", false),
        ("A3", false),
        ("A4", false),
        ("A5", false),
        ("D4", false),
        ("D5", true),
        ("A6", true),
    ] {
        let rs = RootSystem::new(name.parse()?);
        let budget = if extended {
            CensusBudget::extended()
        } else {
            CensusBudget::default()
        };
        let start = Instant::now();
        let report = chamber::conjecture_sweep(&rs, &budget)?;
        println!(
            "{:<5} {:>9} {:>9} {:>12} {:>9.2?}",
            name,
            report.class_count(),
            report.adapted_count(),
            if report.holds() { "holds" } else { "fails" },
            start.elapsed(),
        );
    }
    Ok(())
}
