//! Linearity of the root-to-weight pairing: for adapted words the chamber
//! weights are a linear image of the roots (the negated bilinear form); for
//! non-adapted classes linearity fails, and the report pinpoints the first
//! position where it breaks.
//!
//!     cargo run --example linearity_witness [type] [word]
//!     cargo run --example linearity_witness A3 2,1,2,3,2,1

use std::env;

use arquiver::chamber;
use arquiver::words::ReducedWord;
use arquiver::{Result, RootSystem, Weight};

fn report(rs: &RootSystem, word: &ReducedWord) -> Result<()> {
    let report = chamber::linearity_witness(rs, word)?;
    if report.is_linear() {
        println!("{word}: linear");
        let map = report.map().expect("linear reports carry the map");
        for i in 1..=rs.rank() {
            println!("  sends a{i} to {}", Weight::new(map.col(i - 1)));
        }
        println!(
            "  simple roots sit at positions {:?}",
            report.simple_positions()
        );
    } else {
        println!("{word}: NOT linear");
        println!(
            "  first failure at position {}: {}",
            report
                .failing_position()
                .expect("failures carry a position"),
            report.witness().expect("failures carry a witness"),
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    let args: Vec<String> = env::args().skip(1).collect();
    if args.len() == 2 {
        let rs = RootSystem::new(args[0].parse()?);
        let letters = args[1]
            .split(',')
            .map(|p| p.trim().parse::<usize>().expect("letters are numbers"))
            .collect();
        return report(&rs, &ReducedWord::new(&rs, letters)?);
    }

    let rs = RootSystem::new("A3".parse()?);
    // Two adapted longest words (linear) and two non-adapted ones (each the
    // sole member of its commutation class, and each non-linear).
    for letters in [
        vec![2, 1, 3, 2, 3, 1],
        vec![3, 2, 1, 3, 2, 3],
        vec![2, 1, 2, 3, 2, 1],
        vec![2, 3, 2, 1, 2, 3],
    ] {
        report(&rs, &ReducedWord::new(&rs, letters)?)?;
    }
    Ok(())
}
