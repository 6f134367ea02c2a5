//! Level structure of an adapted word: each level's weights form one orbit
//! of the Coxeter element, anchored at a negated fundamental weight. In
//! type A the same levels fall out of the cycle writing as dotted columns.
//!
//!     cargo run --example coxeter_levels [type] [orientation]
//!     cargo run --example coxeter_levels A3 "1>2,3>2"

use std::env;

use arquiver::chamber;
use arquiver::quiverform::{self, Orientation};
use arquiver::typea;
use arquiver::{Family, Result, RootSystem};

fn main() -> Result<()> {
    let args: Vec<String> = env::args().skip(1).collect();
    let (name, orientation) = match args.len() {
        2 => (args[0].clone(), Some(args[1].clone())),
        1 => (args[0].clone(), None),
        _ => ("A3".to_string(), Some("1>2,3>2".to_string())),
    };
    let rs = RootSystem::new(name.parse()?);
    let q = match orientation {
        Some(text) => Orientation::parse(rs.dynkin(), &text)?,
        None => Orientation::all(rs.dynkin())
            .into_iter()
            .next()
            .expect("at least one"),
    };

    let word = quiverform::adapted_word(&rs, &q);
    println!("orientation {q}, adapted word {word}");
    let c = quiverform::coxeter_element(&rs, &q);
    println!("coxeter word {:?}", quiverform::coxeter_word(&q));

    let seq = chamber::chamber_weights(&rs, &word);
    let structure = chamber::level_structure(&rs, &seq, Some(&q))?;
    println!(
        "levels regenerate from their tails: {}",
        structure.coxeter_verified()
    );
    for i in 1..=rs.rank() {
        let shown: Vec<String> = structure.weights(i).iter().map(|w| w.to_string()).collect();
        println!(
            "  level {i}: {} (tail {})",
            shown.join(", "),
            structure.tail(i)
        );
    }

    // Root translation inside each level: the earlier root is the Coxeter
    // image of the later.
    let quiver = arquiver::arq::arq_from_word(&rs, &word);
    for i in 1..=rs.rank() {
        let positions = quiver.level_positions(i);
        for pair in positions.windows(2) {
            assert_eq!(quiver.root(pair[0]), &c.apply_root(quiver.root(pair[1])));
        }
    }
    println!("every level is one Coxeter translation orbit");

    if rs.dynkin().family() == Family::A {
        let cw = typea::cycle_writing(&rs, &q)?;
        println!("\ncycle writing {:?}, offsets {:?}", cw.cycle(), {
            (1..=rs.rank()).map(|i| cw.offset(i)).collect::<Vec<_>>()
        });
        for (i, level) in typea::level_columns(&rs, &q)?.iter().enumerate() {
            let dotted: Vec<String> = level.iter().map(|col| cw.dotted(col)).collect();
            println!("  level {}: {}", i + 1, dotted.join("  "));
        }
    }
    Ok(())
}
