//! Cross-cutting property suites: exhaustive sweeps over every orientation
//! in small rank, plus randomized checks driven by a fixed-seed generator.

use std::collections::BTreeSet;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use arquiver::arq;
use arquiver::chamber;
use arquiver::quiverform::{self, Orientation, RingelForm};
use arquiver::typea;
use arquiver::weyl::{self, WeylElement};
use arquiver::words::{self, CensusBudget, ReducedWord, RootOrder};
use arquiver::Column;

mod common;
use common::{element_with_prefix, random_longest_word, rs, small_types};

#[test]
fn sink_reflections_intertwine_the_bilinear_forms() {
    let mut pairs = 0usize;
    for r in small_types() {
        for q in Orientation::all(r.dynkin()) {
            for k in q.sinks() {
                let sk = WeylElement::generator(&r, k).unwrap();
                let before = RingelForm::new(&q);
                let after = RingelForm::new(&q.reflect_sink(k).unwrap());
                assert_eq!(
                    sk.weight_matrix().mul(after.matrix()),
                    before.matrix().mul(sk.root_matrix()),
                    "{q} sink {k}"
                );
                pairs += 1;
            }
        }
    }
    assert!(pairs > 100, "swept {pairs} (orientation, sink) pairs");
}

#[test]
fn level_tails_of_random_longest_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut cases = 0usize;
    for t in ["A2", "A3", "A4", "D4"] {
        let r = rs(t);
        for _ in 0..250 {
            let w = random_longest_word(&r, &mut rng);
            let seq = chamber::chamber_weights(&r, &w);
            let structure = chamber::level_structure(&r, &seq, None).unwrap();
            for i in 1..=r.rank() {
                assert_eq!(
                    structure.tail(i),
                    &r.fundamental_weight(r.star(i)).negated(),
                    "{t} word {w} level {i}"
                );
                assert_eq!(
                    structure.positions(i).len(),
                    w.letters().iter().filter(|&&l| l == i).count()
                );
            }
            cases += 1;
        }
    }
    assert_eq!(cases, 1000);
}

#[test]
fn levels_regenerate_from_coxeter_orbits_of_their_tails() {
    for r in small_types() {
        for q in Orientation::all(r.dynkin()) {
            let word = quiverform::adapted_word(&r, &q);
            let seq = chamber::chamber_weights(&r, &word);
            let structure = chamber::level_structure(&r, &seq, Some(&q)).unwrap();
            assert!(structure.coxeter_verified(), "{q}");
            for i in 1..=r.rank() {
                assert_eq!(
                    structure.positions(i).len(),
                    quiverform::level_size(&r, &q, i),
                    "{q} level {i}"
                );
            }
        }
    }
}

#[test]
fn path_counts_reproduce_level_sizes_in_type_a() {
    for t in ["A2", "A3", "A4", "A5", "A6"] {
        let r = rs(t);
        for q in Orientation::all(r.dynkin()) {
            for i in 1..=r.rank() {
                assert_eq!(
                    quiverform::level_size_by_path(&r, &q, i).unwrap(),
                    quiverform::level_size(&r, &q, i),
                    "{q} level {i}"
                );
            }
        }
    }
}

#[test]
fn alternating_words_have_matching_coset_quivers() {
    let mut alternating = 0usize;
    for t in ["A3", "A4", "D4"] {
        let r = rs(t);
        let census = words::census(&r, &CensusBudget::default()).unwrap();
        for class in census.classes() {
            for letters in words::class_members(&r, class, 100_000).unwrap() {
                let w = ReducedWord::new(&r, letters).unwrap();
                if !arq::is_alternating(&r, &w) {
                    continue;
                }
                assert_eq!(
                    arq::arq_from_word(&r, &w),
                    arq::arq_from_cosets(&r, &w),
                    "{t} word {w}"
                );
                alternating += 1;
            }
        }
    }
    assert_eq!(alternating, 12 + 328 + 864);
}

#[test]
fn column_inclusion_matches_coset_adjacency() {
    for t in ["A1", "A2", "A3", "A4"] {
        let r = rs(t);
        let strands = r.rank() + 1;
        let pool: Vec<usize> = (1..=strands).collect();
        let mut subsets_by_size: Vec<Vec<BTreeSet<usize>>> = vec![Vec::new(); r.rank() + 1];
        for mask in 1u32..(1 << strands) {
            let set: BTreeSet<usize> = pool
                .iter()
                .copied()
                .filter(|&m| mask & (1 << (m - 1)) != 0)
                .collect();
            if set.len() <= r.rank() {
                subsets_by_size[set.len()].push(set);
            }
        }
        for small_size in 1..r.rank() {
            for small in &subsets_by_size[small_size] {
                let w_small = element_with_prefix(&r, small);
                let c_small = Column::from_set(strands, small).unwrap();
                for large in &subsets_by_size[small_size + 1] {
                    let w_large = element_with_prefix(&r, large);
                    let c_large = Column::from_set(strands, large).unwrap();
                    assert_eq!(
                        typea::column_adjacent(&c_small, &c_large).unwrap(),
                        weyl::coset_adjacent(&r, &w_small, small_size, &w_large, small_size + 1)
                            .unwrap(),
                        "{t} {c_small} vs {c_large}"
                    );
                }
            }
        }
    }
}

#[test]
fn zone_labels_are_the_columns_of_the_chamber_weights() {
    for t in ["A3", "A4"] {
        let r = rs(t);
        let census = words::census(&r, &CensusBudget::default()).unwrap();
        for class in census.classes() {
            let w = class.reduced_word(&r);
            let wd = typea::wiring_diagram(&r, &w).unwrap();
            let seq = chamber::chamber_weights(&r, &w);
            for k in 1..=wd.crossing_count() {
                let expected =
                    typea::weight_to_column(&r, seq.weight(k), w.letters()[k - 1]).unwrap();
                assert_eq!(wd.zone(k), &expected, "{t} word {w} crossing {k}");
            }
        }
    }
}

#[test]
fn random_longest_words_are_convex() {
    let mut rng = ChaCha8Rng::seed_from_u64(411);
    let mut cases = 0usize;
    for t in ["A2", "A3", "A4", "D4", "D5"] {
        let r = rs(t);
        for _ in 0..200 {
            let w = random_longest_word(&r, &mut rng);
            let order = RootOrder::from_word(&r, &w);
            assert!(order.is_convex(&r), "{t} word {w}");
            let set: BTreeSet<_> = order.roots().iter().cloned().collect();
            assert_eq!(
                set.len(),
                r.num_positive_roots(),
                "{t} word {w} lists every root once"
            );
            cases += 1;
        }
    }
    assert_eq!(cases, 1000);
}

#[test]
fn levels_translate_by_the_coxeter_element() {
    for r in small_types() {
        for q in Orientation::all(r.dynkin()) {
            let c = quiverform::coxeter_element(&r, &q);
            let word = quiverform::adapted_word(&r, &q);
            let quiver = arq::arq_from_word(&r, &word);
            for i in 1..=r.rank() {
                let positions = quiver.level_positions(i);
                for pair in positions.windows(2) {
                    assert_eq!(
                        quiver.root(pair[0]),
                        &c.apply_root(quiver.root(pair[1])),
                        "{q} level {i}"
                    );
                }
            }
        }
    }
}

#[test]
fn commuting_swaps_preserve_class_and_pairing() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut swaps = 0usize;
    for t in ["A3", "A4", "D4"] {
        let r = rs(t);
        for _ in 0..400 {
            let w = random_longest_word(&r, &mut rng);
            let swappable: Vec<usize> = (0..w.len() - 1)
                .filter(|&k| {
                    let (a, b) = (w.letters()[k], w.letters()[k + 1]);
                    a != b && !r.dynkin().edges().contains(&(a.min(b), a.max(b)))
                })
                .collect();
            let Some(&k) = swappable.choose(&mut rng) else {
                continue;
            };
            let mut letters = w.letters().to_vec();
            letters.swap(k, k + 1);
            let swapped = ReducedWord::new(&r, letters).unwrap();
            assert_eq!(
                words::normal_form(&r, &w),
                words::normal_form(&r, &swapped),
                "{t} word {w} swap at {k}"
            );
            let roots_before: BTreeSet<_> = RootOrder::from_word(&r, &w)
                .roots()
                .iter()
                .cloned()
                .collect();
            let roots_after: BTreeSet<_> = RootOrder::from_word(&r, &swapped)
                .roots()
                .iter()
                .cloned()
                .collect();
            assert_eq!(roots_before, roots_after);
            swaps += 1;
        }
    }
    assert!(swaps >= 1000, "exercised {swaps} swaps");
}

#[test]
fn census_matches_the_word_level_partition() {
    for t in ["A3", "A4", "D4"] {
        let r = rs(t);
        let census = words::census(&r, &CensusBudget::default()).unwrap();
        let longest = weyl::longest_element(&r);
        let every_word = words::all_reduced_words(&r, &longest, 1_000_000).unwrap();
        let mut class_reps = BTreeSet::new();
        for letters in &every_word {
            let w = ReducedWord::new(&r, letters.clone()).unwrap();
            class_reps.insert(words::normal_form(&r, &w));
        }
        assert_eq!(class_reps.len(), census.len(), "{t}");
        let from_census: BTreeSet<_> = census.classes().iter().cloned().collect();
        assert_eq!(class_reps, from_census, "{t}");
    }
}

#[test]
fn quiver_methods_agree_on_every_small_orientation() {
    for r in small_types() {
        if r.rank() > 5 {
            continue;
        }
        for q in Orientation::all(r.dynkin()) {
            let word = quiverform::adapted_word(&r, &q);
            let by_word = arq::arq_from_word(&r, &word);
            assert_eq!(by_word, arq::arq_from_ringel(&r, &q), "{q}");
            assert_eq!(by_word, arq::arq_from_cosets(&r, &word), "{q}");
        }
    }
}

#[test]
fn coset_representatives_ignore_the_choice_of_word() {
    let mut rng = ChaCha8Rng::seed_from_u64(5150);
    for t in ["A3", "D4"] {
        let r = rs(t);
        for _ in 0..50 {
            let w = random_longest_word(&r, &mut rng);
            let prefixes = weyl::prefix_elements(&r, w.letters()).unwrap();
            let other = random_longest_word(&r, &mut rng);
            let other_prefixes = weyl::prefix_elements(&r, other.letters()).unwrap();
            // Full words multiply to the same element, so the final coset
            // representatives agree no matter the word.
            for i in 1..=r.rank() {
                let j = weyl::GeneratorSet::all_but(r.rank(), i).unwrap();
                assert_eq!(
                    weyl::min_coset_rep(&r, prefixes.last().unwrap(), &j),
                    weyl::min_coset_rep(&r, other_prefixes.last().unwrap(), &j)
                );
            }
        }
    }
}
