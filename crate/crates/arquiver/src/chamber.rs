//! Chamber weights of a reduced word: the sequence μ_j obtained by pushing
//! each letter's fundamental weight through the prefix to its left, the
//! linearity test pairing roots with weights, the orientation/linearity
//! sweep over a census, and the per-level structure driven by the Coxeter
//! element.

use serde_json::json;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiverform::{self, Orientation};
use crate::rootsys::{DynkinType, RootSystem, Weight};
use crate::weyl;
use crate::words::{self, CensusBudget, CommClass, ReducedWord, RootOrder};

/// The weights μ_1..μ_N of a reduced word, μ_j being the image of the j-th
/// letter's fundamental weight under the product of letters 1..j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChamberSeq {
    letters: Vec<usize>,
    weights: Vec<Weight>,
}

impl ChamberSeq {
    /// The source word's letters.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// All weights in position order.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// The weight at 1-based position k.
    pub fn weight(&self, k: usize) -> &Weight {
        &self.weights[k - 1]
    }

    /// Number of positions.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// True when the word is empty.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// 1-based positions whose letter is `i`, in order.
    pub fn level_positions(&self, i: usize) -> Vec<usize> {
        (1..=self.len())
            .filter(|&k| self.letters[k - 1] == i)
            .collect()
    }

    /// The weights at level `i`, in position order.
    pub fn level_weights(&self, i: usize) -> Vec<Weight> {
        self.level_positions(i)
            .into_iter()
            .map(|k| self.weights[k - 1].clone())
            .collect()
    }
}

/// Computes the chamber weights of a reduced word.
pub fn chamber_weights(rs: &RootSystem, word: &ReducedWord) -> ChamberSeq {
    let prefixes =
        weyl::prefix_elements(rs, word.letters()).expect("letters validated at construction");
    let weights = word
        .letters()
        .iter()
        .enumerate()
        .map(|(j, &l)| prefixes[j + 1].apply_weight(&rs.fundamental_weight(l)))
        .collect();
    ChamberSeq {
        letters: word.letters().to_vec(),
        weights,
    }
}

/// Outcome of testing whether a single linear map sends every root of the
/// word's root order to the matching chamber weight. The candidate map is
/// pinned down by the positions of the simple roots, then checked
/// everywhere; for adapted words it is the negated bilinear-form map of the
/// orientation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearityReport {
    map: Option<IntMatrix>,
    simple_positions: Vec<usize>,
    failing_position: Option<usize>,
    witness: Option<String>,
}

impl LinearityReport {
    /// True when one linear map reproduces every chamber weight.
    pub fn is_linear(&self) -> bool {
        self.failing_position.is_none()
    }

    /// The witness map in ω-coordinates (column i is the image of the i-th
    /// simple root), present only when linear.
    pub fn map(&self) -> Option<&IntMatrix> {
        self.map.as_ref()
    }

    /// 1-based position of each simple root in the word's root order.
    pub fn simple_positions(&self) -> &[usize] {
        &self.simple_positions
    }

    /// First 1-based position where the candidate map fails.
    pub fn failing_position(&self) -> Option<usize> {
        self.failing_position
    }

    /// Human-readable contradiction like `mu3+mu1 != mu2`, spelling the
    /// failing weight against the combination forced by the simple roots.
    pub fn witness(&self) -> Option<&str> {
        self.witness.as_deref()
    }
}

/// Tests whether the pairing β_k ↦ μ_k extends to a linear map.
pub fn linearity_witness(rs: &RootSystem, word: &ReducedWord) -> Result<LinearityReport> {
    word.require_longest(rs)?;
    let order = RootOrder::from_word(rs, word);
    let seq = chamber_weights(rs, word);
    let n = rs.rank();

    let simple_positions: Vec<usize> = (1..=n)
        .map(|i| {
            order
                .position_of(&rs.simple_root(i))
                .expect("a longest word's root order lists every simple root")
        })
        .collect();

    let mut map = IntMatrix::zero(n);
    for (i, &pos) in simple_positions.iter().enumerate() {
        for (r, &x) in seq.weight(pos).coords().iter().enumerate() {
            map.set(r, i, x);
        }
    }

    for k in 1..=seq.len() {
        let root = &order.roots()[k - 1];
        if map.mul_vec(root.coeffs()) == seq.weight(k).coords() {
            continue;
        }
        let lhs = (1..=n)
            .filter(|&i| root.coeff(i) != 0)
            .map(|i| {
                let m = root.coeff(i);
                let pos = simple_positions[i - 1];
                if m == 1 {
                    format!("mu{pos}")
                } else {
                    format!("{m}*mu{pos}")
                }
            })
            .collect::<Vec<_>>()
            .join("+");
        return Ok(LinearityReport {
            map: None,
            simple_positions,
            failing_position: Some(k),
            witness: Some(format!("{lhs} != mu{k}")),
        });
    }

    Ok(LinearityReport {
        map: Some(map),
        simple_positions,
        failing_position: None,
        witness: None,
    })
}

/// One commutation class of the sweep: the orientation it is adapted to, if
/// any, and whether its chamber pairing is linear.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepRow {
    class: CommClass,
    orientation: Option<Orientation>,
    linear: bool,
}

impl SweepRow {
    /// The class in normal form.
    pub fn class(&self) -> &CommClass {
        &self.class
    }

    /// The orientation the class is adapted to, when there is one.
    pub fn orientation(&self) -> Option<&Orientation> {
        self.orientation.as_ref()
    }

    /// Whether the chamber pairing of the class is linear.
    pub fn is_linear(&self) -> bool {
        self.linear
    }
}

/// Classwise comparison of adaptedness against linearity over a full
/// census of longest-word commutation classes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepReport {
    dynkin: DynkinType,
    rows: Vec<SweepRow>,
}

impl SweepReport {
    /// The diagram the sweep ran over.
    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    /// Per-class results, in census order.
    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    /// Number of classes visited.
    pub fn class_count(&self) -> usize {
        self.rows.len()
    }

    /// Number of classes adapted to some orientation.
    pub fn adapted_count(&self) -> usize {
        self.rows.iter().filter(|r| r.orientation.is_some()).count()
    }

    /// Number of classes with a linear chamber pairing.
    pub fn linear_count(&self) -> usize {
        self.rows.iter().filter(|r| r.linear).count()
    }

    /// True when adaptedness and linearity coincide on every class.
    pub fn holds(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.orientation.is_some() == r.linear)
    }

    /// Machine-readable dump of the sweep.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "type": self.dynkin.to_string(),
            "classes": self.class_count(),
            "adapted": self.adapted_count(),
            "linear": self.linear_count(),
            "conjecture": if self.holds() { "holds" } else { "fails" },
            "rows": self.rows.iter().map(|r| json!({
                "class": r.class.to_string(),
                "adapted": r.orientation.is_some(),
                "orientation": r.orientation.as_ref().map(|q| q.to_string()),
                "linear": r.linear,
            })).collect::<Vec<_>>(),
        })
    }

    /// Two-column summary in the card-counting layout, plus the verdict.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str("type    card A  card O\n");
        out.push_str(&format!(
            "{:<8}{:<8}{}\n",
            self.dynkin.to_string(),
            self.adapted_count(),
            self.class_count()
        ));
        out.push_str(&format!(
            "linear classes: {}\nconjecture: {}\n",
            self.linear_count(),
            if self.holds() { "holds" } else { "fails" }
        ));
        out
    }
}

/// Runs a census and tests, class by class, whether being adapted to an
/// orientation coincides with having a linear chamber pairing.
pub fn conjecture_sweep(rs: &RootSystem, budget: &CensusBudget) -> Result<SweepReport> {
    let census = words::census(rs, budget)?;
    let mut rows = Vec::with_capacity(census.len());
    for class in census.classes() {
        let word = class.reduced_word(rs);
        let orientation = quiverform::adapted_orientation(rs, &word);
        let linear = linearity_witness(rs, &word)?.is_linear();
        rows.push(SweepRow {
            class: class.clone(),
            orientation,
            linear,
        });
    }
    Ok(SweepReport {
        dynkin: rs.dynkin(),
        rows,
    })
}

/// The per-level weight sequences of a longest word, together with the
/// validated facts about them: every level ends at the negated fundamental
/// weight of the dual vertex, and for adapted words each level is the orbit
/// of that tail under the orientation's Coxeter element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelStructure {
    positions: Vec<Vec<usize>>,
    weights: Vec<Vec<Weight>>,
    tails: Vec<Weight>,
    coxeter_verified: bool,
}

impl LevelStructure {
    /// 1-based word positions of level `i`, in order.
    pub fn positions(&self, i: usize) -> &[usize] {
        &self.positions[i - 1]
    }

    /// The weights of level `i`, in position order.
    pub fn weights(&self, i: usize) -> &[Weight] {
        &self.weights[i - 1]
    }

    /// The closing weight of level `i`: minus the fundamental weight at the
    /// diagram involution's image of `i`.
    pub fn tail(&self, i: usize) -> &Weight {
        &self.tails[i - 1]
    }

    /// True when an orientation was supplied and every level was confirmed
    /// to be the Coxeter orbit of its tail.
    pub fn coxeter_verified(&self) -> bool {
        self.coxeter_verified
    }
}

/// Splits the chamber weights of a longest word by level and validates the
/// tail law; with an orientation, additionally verifies the Coxeter-orbit
/// form, refusing words not adapted to it.
pub fn level_structure(
    rs: &RootSystem,
    seq: &ChamberSeq,
    q: Option<&Orientation>,
) -> Result<LevelStructure> {
    if seq.len() != rs.num_positive_roots() {
        return Err(Error::NotLongestWord {
            len: seq.len(),
            expected: rs.num_positive_roots(),
        });
    }

    let n = rs.rank();
    let mut positions = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let mut tails = Vec::with_capacity(n);
    for i in 1..=n {
        let pos = seq.level_positions(i);
        let w = seq.level_weights(i);
        let tail = rs.fundamental_weight(rs.star(i)).negated();
        assert_eq!(
            w.last(),
            Some(&tail),
            "level {i} of a longest word must close at the negated dual weight"
        );
        positions.push(pos);
        weights.push(w);
        tails.push(tail);
    }

    let mut coxeter_verified = false;
    if let Some(q) = q {
        if !quiverform::is_adapted(q, seq.letters()) {
            return Err(Error::NotAdapted(format!(
                "{q}; levels of non-adapted words need not be Coxeter orbits"
            )));
        }
        let c = quiverform::coxeter_element(rs, q);
        for i in 1..=n {
            let level = &weights[i - 1];
            let mut expected = tails[i - 1].clone();
            for (step, w) in level.iter().rev().enumerate() {
                if step > 0 {
                    expected = c.apply_weight(&expected);
                }
                assert_eq!(
                    w, &expected,
                    "level {i} of an adapted word must be the Coxeter orbit of its tail"
                );
            }
        }
        coxeter_verified = true;
    }

    Ok(LevelStructure {
        positions,
        weights,
        tails,
        coxeter_verified,
    })
}
