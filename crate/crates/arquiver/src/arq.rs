//! The Auslander-Reiten quiver as a labeled acyclic digraph on the
//! positions of a reduced word, with three independent constructions —
//! letter patterns, the bilinear-form criterion of an orientation, and
//! coset adjacency in the chamber complex — plus the reverse reading of a
//! quiver back into words.

use std::collections::BTreeSet;

use serde_json::json;

use crate::chamber;
use crate::error::{Error, Result};
use crate::quiverform::{self, Orientation, RingelForm};
use crate::rootsys::{DynkinType, Root, RootSystem, Weight};
use crate::weyl;
use crate::words::{ReducedWord, RootOrder};

/// A quiver on positions 1..N: each position carries the root and chamber
/// weight of the source word at that spot, its level (the letter), and the
/// arrows run strictly forward between linked levels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ARQuiver {
    dynkin: DynkinType,
    letters: Vec<usize>,
    roots: Vec<Root>,
    weights: Vec<Weight>,
    arrows: BTreeSet<(usize, usize)>,
}

impl ARQuiver {
    /// Number of positions.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True when built from the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The diagram type.
    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    /// The source word's letters; the letter at position k is its level.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// The level of 1-based position k.
    pub fn level(&self, k: usize) -> usize {
        self.letters[k - 1]
    }

    /// The root at 1-based position k.
    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k - 1]
    }

    /// The chamber weight at 1-based position k.
    pub fn weight(&self, k: usize) -> &Weight {
        &self.weights[k - 1]
    }

    /// All arrows (j, k), sorted; every arrow has j < k.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().copied()
    }

    /// Number of arrows.
    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// Positions of level `i`, in order.
    pub fn level_positions(&self, i: usize) -> Vec<usize> {
        (1..=self.len())
            .filter(|&k| self.letters[k - 1] == i)
            .collect()
    }

    /// The first position of each nonempty level, keyed by level.
    pub fn projectives(&self) -> Vec<(usize, usize)> {
        (1..=self.dynkin.rank())
            .filter_map(|i| self.level_positions(i).first().map(|&k| (i, k)))
            .collect()
    }

    /// The last position of each nonempty level, keyed by level.
    pub fn injectives(&self) -> Vec<(usize, usize)> {
        (1..=self.dynkin.rank())
            .filter_map(|i| self.level_positions(i).last().map(|&k| (i, k)))
            .collect()
    }

    /// Positions reachable from `from` by a directed path of length >= 0.
    pub fn reachable(&self, from: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([from]);
        let mut stack = vec![from];
        while let Some(j) = stack.pop() {
            for &(a, b) in &self.arrows {
                if a == j && seen.insert(b) {
                    stack.push(b);
                }
            }
        }
        seen
    }

    /// Graphviz rendering with positions in order and sorted arrows.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph arq {\n  rankdir=LR;\n  node [shape=box];\n");
        for k in 1..=self.len() {
            out.push_str(&format!(
                "  n{k} [label=\"{k}: {} / {} / level {}\"];\n",
                self.root(k),
                self.weight(k),
                self.level(k)
            ));
        }
        for &(j, k) in &self.arrows {
            out.push_str(&format!("  n{j} -> n{k};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Machine-readable dump mirroring the type.
    pub fn to_json(&self) -> serde_json::Value {
        let projectives: BTreeSet<usize> = self.projectives().into_iter().map(|(_, k)| k).collect();
        let injectives: BTreeSet<usize> = self.injectives().into_iter().map(|(_, k)| k).collect();
        json!({
            "type": self.dynkin.to_string(),
            "word": self.letters,
            "positions": (1..=self.len()).map(|k| json!({
                "position": k,
                "level": self.level(k),
                "root": self.root(k).to_string(),
                "root_coeffs": self.root(k).coeffs(),
                "weight": self.weight(k).to_string(),
                "weight_coords": self.weight(k).coords(),
                "projective": projectives.contains(&k),
                "injective": injectives.contains(&k),
            })).collect::<Vec<_>>(),
            "arrows": self.arrows.iter().collect::<Vec<_>>(),
        })
    }

    /// Plain-text rendering: one line per position, then the arrows.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for k in 1..=self.len() {
            out.push_str(&format!(
                "{k}: level {} root {} weight {}\n",
                self.level(k),
                self.root(k),
                self.weight(k)
            ));
        }
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|&(j, k)| format!("{j}->{k}"))
            .collect();
        out.push_str(&format!("arrows: {}\n", arrows.join(" ")));
        out
    }
}

fn labels(rs: &RootSystem, word: &ReducedWord) -> (Vec<usize>, Vec<Root>, Vec<Weight>) {
    let letters = word.letters().to_vec();
    let roots = RootOrder::from_word(rs, word).roots().to_vec();
    let weights = chamber::chamber_weights(rs, word).weights().to_vec();
    (letters, roots, weights)
}

/// True when, for every pair of linked vertices, the word's restriction to
/// those two letters strictly alternates.
pub fn is_alternating(rs: &RootSystem, word: &ReducedWord) -> bool {
    rs.edges().iter().all(|&(a, b)| {
        let mut last = 0;
        for &l in word.letters().iter().filter(|&&l| l == a || l == b) {
            if l == last {
                return false;
            }
            last = l;
        }
        true
    })
}

/// Builds the quiver from letter patterns alone: an arrow (j, k) whenever
/// the levels are linked, j < k, and the level of j does not recur strictly
/// between them.
pub fn arq_from_word(rs: &RootSystem, word: &ReducedWord) -> ARQuiver {
    let (letters, roots, weights) = labels(rs, word);
    let mut arrows = BTreeSet::new();
    for j in 1..=letters.len() {
        for k in j + 1..=letters.len() {
            if !rs.linked(letters[j - 1], letters[k - 1]) {
                continue;
            }
            if letters[j..k - 1].iter().all(|&p| p != letters[j - 1]) {
                arrows.insert((j, k));
            }
        }
    }
    ARQuiver {
        dynkin: rs.dynkin(),
        letters,
        roots,
        weights,
        arrows,
    }
}

/// Builds the quiver of an orientation from its bilinear form: positions
/// follow the canonical adapted word, and (j, k) is an arrow when
/// R(β_j, β_k) > 0 with no third root γ satisfying R(β_j, γ) > 0 and
/// R(γ, β_k) > 0.
pub fn arq_from_ringel(rs: &RootSystem, q: &Orientation) -> ARQuiver {
    arq_from_ringel_on(rs, q, &quiverform::adapted_word(rs, q))
}

/// The bilinear-form construction laid out on the positions of a chosen
/// adapted word of the orientation instead of the canonical one. The arrow
/// rule reads only root values, so any word of the adapted class yields the
/// same quiver up to its own position labels.
pub fn arq_from_ringel_on(rs: &RootSystem, q: &Orientation, word: &ReducedWord) -> ARQuiver {
    debug_assert!(
        quiverform::is_adapted(q, word.letters()),
        "the layout word must be adapted to the orientation"
    );
    let (letters, roots, weights) = labels(rs, word);
    let form = RingelForm::new(q);
    let mut arrows = BTreeSet::new();
    for j in 1..=roots.len() {
        for k in 1..=roots.len() {
            if j == k || form.value(&roots[j - 1], &roots[k - 1]) <= 0 {
                continue;
            }
            let blocked = roots.iter().enumerate().any(|(p, gamma)| {
                p + 1 != j
                    && p + 1 != k
                    && form.value(&roots[j - 1], gamma) > 0
                    && form.value(gamma, &roots[k - 1]) > 0
            });
            if !blocked {
                debug_assert!(j < k, "form arrows of an adapted order run forward");
                arrows.insert((j, k));
            }
        }
    }
    ARQuiver {
        dynkin: rs.dynkin(),
        letters,
        roots,
        weights,
        arrows,
    }
}

/// Builds the quiver from the chamber complex: an arrow (j, k) whenever the
/// levels are linked, j < k, and the prefix cosets at j and k share a face.
pub fn arq_from_cosets(rs: &RootSystem, word: &ReducedWord) -> ARQuiver {
    let (letters, roots, weights) = labels(rs, word);
    let prefixes =
        weyl::prefix_elements(rs, word.letters()).expect("letters validated at construction");
    let mut arrows = BTreeSet::new();
    for j in 1..=letters.len() {
        for k in j + 1..=letters.len() {
            if !rs.linked(letters[j - 1], letters[k - 1]) {
                continue;
            }
            let adjacent = weyl::coset_adjacent(
                rs,
                &prefixes[j],
                letters[j - 1],
                &prefixes[k],
                letters[k - 1],
            )
            .expect("linked letters are distinct");
            if adjacent {
                arrows.insert((j, k));
            }
        }
    }
    ARQuiver {
        dynkin: rs.dynkin(),
        letters,
        roots,
        weights,
        arrows,
    }
}

/// All ways of reading the quiver's positions compatibly with the arrows,
/// as words of level labels: the linear extensions of the arrow order, in
/// lexicographic position order, capped to guard against explosion.
pub fn readings(rs: &RootSystem, arq: &ARQuiver, cap: usize) -> Result<Vec<ReducedWord>> {
    let n = arq.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(j, k) in &arq.arrows {
        preds[k].push(j);
    }
    let mut used = vec![false; n + 1];
    let mut sequence = Vec::with_capacity(n);
    let mut out = Vec::new();
    fn extend(
        rs: &RootSystem,
        arq: &ARQuiver,
        preds: &[Vec<usize>],
        used: &mut Vec<bool>,
        sequence: &mut Vec<usize>,
        out: &mut Vec<ReducedWord>,
        cap: usize,
    ) -> Result<()> {
        if sequence.len() == arq.len() {
            if out.len() == cap {
                return Err(Error::EnumerationCap { cap });
            }
            let letters: Vec<usize> = sequence.iter().map(|&k| arq.level(k)).collect();
            out.push(
                ReducedWord::new(rs, letters)
                    .expect("readings of a reduced word's quiver are reduced"),
            );
            return Ok(());
        }
        for k in 1..=arq.len() {
            if !used[k] && preds[k].iter().all(|&p| used[p]) {
                used[k] = true;
                sequence.push(k);
                extend(rs, arq, preds, used, sequence, out, cap)?;
                sequence.pop();
                used[k] = false;
            }
        }
        Ok(())
    }
    extend(rs, arq, &preds, &mut used, &mut sequence, &mut out, cap)?;
    Ok(out)
}
