//! A guided tour of the crate on the smallest interesting example, A3:
//! positive roots, a longest word, the root order and chamber weights it
//! carves out, adaptedness, and the quiver built from it.
//!
//!     cargo run --example tour

use arquiver::arq;
use arquiver::chamber;
use arquiver::quiverform;
use arquiver::words::{ReducedWord, RootOrder};
use arquiver::{Result, RootSystem};

fn main() -> Result<()> {
    let rs = RootSystem::new("A3".parse()?);
    println!(
        "type {}, rank {}, {} positive roots",
        rs.dynkin(),
        rs.rank(),
        rs.num_positive_roots()
    );
    for (k, root) in rs.positive_roots().iter().enumerate() {
        println!("  root {}: {root}", k + 1);
    }

    // A longest word: every letter is a vertex, every positive root shows up
    // exactly once along the way.
    let word = ReducedWord::new(&rs, vec![2, 1, 3, 2, 3, 1])?;
    println!(
        "\nlongest word {word} (reduced: √, longest: {})",
        word.is_longest(&rs)
    );

    let order = RootOrder::from_word(&rs, &word);
    let weights = chamber::chamber_weights(&rs, &word);
    println!("position | letter | root        | chamber weight");
    for k in 1..=word.len() {
        println!(
            "       {k} |      {} | {:<11} | {}",
            word.letters()[k - 1],
            order.roots()[k - 1].to_string(),
            weights.weight(k),
        );
    }
    println!("convex: {}", order.is_convex(&rs));

    // The word is adapted to exactly one orientation of the diagram.
    match quiverform::adapted_orientation(&rs, &word) {
        Some(q) => println!("adapted to: {q}"),
        None => println!("adapted to: no orientation"),
    }

    // The quiver on these positions, straight from the letter pattern.
    let quiver = arq::arq_from_word(&rs, &word);
    println!("\n{}", quiver.to_text());
    println!("projectives (level, position): {:?}", quiver.projectives());
    println!("injectives  (level, position): {:?}", quiver.injectives());

    // Every linear extension of the quiver reads off a word of the same
    // commutation class.
    println!("\nreadings:");
    for reading in arq::readings(&rs, &quiver, 100)? {
        println!("  {reading}");
    }
    Ok(())
}
