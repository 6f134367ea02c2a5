//! Graphviz export: builds the quiver of an orientation and prints a DOT
//! document, one node per position labeled with its root, weight, and level.
//!
//!     cargo run --example quiver_dot D4 "2>1,2>3,2>4" | dot -Tpng > quiver.png

use std::env;

use arquiver::arq;
use arquiver::quiverform::{self, Orientation};
use arquiver::{Result, RootSystem};

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
    print!("{}", arq::arq_from_word(&rs, &word).to_dot());
    Ok(())
}
