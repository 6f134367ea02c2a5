//! Wiring diagram of a type-A reduced word: strands cross once per letter,
//! and the left-bounded zones between them are labeled by the strands
//! passing above. Pass `--svg` to emit an SVG document instead of text.
//!
//!     cargo run --example wiring
//!     cargo run --example wiring A3 2,1,3,2,3,1 --svg > wiring.svg

use std::env;

use arquiver::typea::{self, WiringFormat};
use arquiver::words::ReducedWord;
use arquiver::{Result, RootSystem};

fn main() -> Result<()> {
    let mut args: Vec<String> = env::args().skip(1).collect();
    let svg = args.iter().any(|a| a == "--svg");
    args.retain(|a| a != "--svg");
    let (name, letters) = match args.len() {
        2 => (args[0].clone(), args[1].clone()),
        _ => ("A3".to_string(), "2,1,3,2,3,1".to_string()),
    };
    let rs = RootSystem::new(name.parse()?);
    let letters: Vec<usize> = letters
        .split(',')
        .map(|p| p.trim().parse().expect("letters are numbers"))
        .collect();
    let word = ReducedWord::new(&rs, letters)?;

    let wd = typea::wiring_diagram(&rs, &word)?;
    if svg {
        print!("{}", typea::render_wiring(&wd, WiringFormat::Svg));
        return Ok(());
    }
    print!("{}", typea::render_wiring(&wd, WiringFormat::Text));
    println!("\nzone labels, one per crossing:");
    for k in 1..=wd.crossing_count() {
        println!(
            "  crossing {k} (level {}): {}",
            wd.letters()[k - 1],
            wd.zone(k)
        );
    }
    println!(
        "\nzone arrows (shared-face adjacency): {:?}",
        wd.zone_arrows()
    );
    Ok(())
}
