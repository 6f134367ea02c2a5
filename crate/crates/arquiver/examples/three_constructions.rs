//! The same quiver three ways: from the letter pattern of the adapted word,
//! from the bilinear form of the orientation, and from face-sharing of
//! prefix cosets in the chamber complex. The three agree on every
//! orientation of every type this sweeps.
//!
//!     cargo run --release --example three_constructions [type...]

use std::env;

use arquiver::arq;
use arquiver::quiverform::{self, Orientation};
use arquiver::{Result, RootSystem};

fn main() -> Result<()> {
    let mut types: Vec<String> = env::args().skip(1).collect();
    if types.is_empty() {
        types = ["A2", "A3", "A4", "D4", "D5"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    }
    for name in types {
        let rs = RootSystem::new(name.parse()?);
        println!("{name}:");
        for q in Orientation::all(rs.dynkin()) {
            let word = quiverform::adapted_word(&rs, &q);
            let by_word = arq::arq_from_word(&rs, &word);
            let by_form = arq::arq_from_ringel(&rs, &q);
            let by_cosets = arq::arq_from_cosets(&rs, &word);
            let verdict = if by_word == by_form && by_word == by_cosets {
                "agree"
            } else {
                "DISAGREE"
            };
            println!(
                "  {q:<24} word {word}  arrows={:<3} {verdict}",
                by_word.arrow_count()
            );
        }
    }
    Ok(())
}
