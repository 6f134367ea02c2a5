//! Every orientation of a diagram with its adapted word, commutation-class
//! size, and letter count per level. Reflecting sinks one letter at a time
//! is what ties words to orientations, so each row is one sweep of that
//! machine.
//!
//!     cargo run --example adapted_words [type]

use std::env;

use arquiver::quiverform::{self, Orientation};
use arquiver::words;
use arquiver::{Result, RootSystem};

fn main() -> Result<()> {
    let name = env::args().nth(1).unwrap_or_else(|| "A3".to_string());
    let rs = RootSystem::new(name.parse()?);
    println!(
        "{name}: {} orientations",
        Orientation::all(rs.dynkin()).len()
    );
    for q in Orientation::all(rs.dynkin()) {
        let word = quiverform::adapted_word(&rs, &q);
        let class = quiverform::adapted_class(&rs, &q);
        let members = words::class_members(&rs, &class, 100_000)?;
        let levels: Vec<usize> = (1..=rs.rank())
            .map(|i| quiverform::level_size(&rs, &q, i))
            .collect();
        println!(
            "  {q:<20} word {word}  class size {:<4} levels {levels:?}",
            members.len()
        );
    }
    Ok(())
}
