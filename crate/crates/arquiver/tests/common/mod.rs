//! Helpers shared by the integration suites.

use std::collections::BTreeSet;

use rand::prelude::*;

use arquiver::weyl::{self, WeylElement};
use arquiver::words::ReducedWord;
use arquiver::RootSystem;

pub fn rs(s: &str) -> RootSystem {
    RootSystem::new(s.parse().unwrap())
}

/// Every supported type of rank at most six.
pub fn small_types() -> Vec<RootSystem> {
    ["A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"]
        .iter()
        .map(|s| rs(s))
        .collect()
}

/// Samples a reduced word for the longest element by extending a reduced
/// prefix with a uniformly random non-descent letter. Every reduced prefix
/// extends to the longest element, so the walk never gets stuck, and every
/// reduced word is reachable.
pub fn random_longest_word(r: &RootSystem, rng: &mut impl Rng) -> ReducedWord {
    let total = r.num_positive_roots();
    let mut letters = Vec::with_capacity(total);
    let mut elem = WeylElement::identity(r.rank());
    while letters.len() < total {
        let choices: Vec<usize> = (1..=r.rank())
            .filter(|&i| !elem.is_right_descent(i))
            .collect();
        let pick = *choices.choose(rng).expect("short elements have ascents");
        elem = elem.compose(&WeylElement::generator(r, pick).unwrap());
        letters.push(pick);
    }
    ReducedWord::new(r, letters).expect("ascent extensions stay reduced")
}

/// Builds the Weyl element whose strand arrangement carries the tracks
/// 1..set.len() onto `set`: the canonical coset representative used to place
/// an index column inside the chamber complex.
pub fn element_with_prefix(r: &RootSystem, set: &BTreeSet<usize>) -> WeylElement {
    let strands = r.rank() + 1;
    let mut image: Vec<usize> = set.iter().copied().collect();
    image.extend((1..=strands).filter(|m| !set.contains(m)));
    let mut arr: Vec<usize> = (1..=strands).collect();
    let mut letters = Vec::new();
    for (p, &target) in image.iter().enumerate() {
        let pos = arr.iter().position(|&v| v == target).expect("permutation");
        for j in (p + 1..=pos).rev() {
            arr.swap(j - 1, j);
            letters.push(j);
        }
    }
    assert_eq!(arr, image);
    weyl::word_to_element(r, &letters).unwrap()
}
