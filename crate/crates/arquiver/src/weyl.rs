//! Weyl group elements as exact integer actions on the weight and root
//! lattices, with length/descent queries and minimal (double-)coset
//! representatives for parabolic subgroups.
//!
//! Composition is function composition: in `v.compose(&w)` the element `w`
//! acts first. A word `(i1, ..., im)` denotes the product `s_{i1} ∘ ... ∘
//! s_{im}`, so the rightmost letter acts first.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::rootsys::{Root, RootSystem, Weight};

/// A Weyl group element, stored as its matrix on the weight lattice
/// (column i = image of the i-th fundamental weight in ω-coordinates)
/// together with the induced matrix on the root lattice in α-coordinates.
///
/// The two matrices determine each other; carrying both makes inversion a
/// pair of transposes and lets descent queries read signs directly.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    on_weights: IntMatrix,
    on_roots: IntMatrix,
}

impl WeylElement {
    /// The identity element of the rank-n group.
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            on_weights: IntMatrix::identity(rank),
            on_roots: IntMatrix::identity(rank),
        }
    }

    /// The simple reflection at vertex `i`.
    pub fn generator(rs: &RootSystem, i: usize) -> Result<Self> {
        rs.check_letters(&[i])?;
        let n = rs.rank();
        let mut on_roots = IntMatrix::identity(n);
        let mut on_weights = IntMatrix::identity(n);
        for j in 1..=n {
            // s_i(α_j) = α_j − c_{ij} α_i: row i of the root matrix.
            on_roots.set(i - 1, j - 1, on_roots.get(i - 1, j - 1) - rs.cartan(i, j));
            // s_i(ω_j) = ω_j − δ_{ij} α_i: column i of the weight matrix.
            on_weights.set(j - 1, i - 1, on_weights.get(j - 1, i - 1) - rs.cartan(j, i));
        }
        Ok(WeylElement {
            on_weights,
            on_roots,
        })
    }

    /// Matrix size = rank of the group.
    pub fn rank(&self) -> usize {
        self.on_weights.size()
    }

    /// Function composition: `other` acts first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            on_weights: self.on_weights.mul(&other.on_weights),
            on_roots: self.on_roots.mul(&other.on_roots),
        }
    }

    /// Group inverse. The weight matrix of w⁻¹ is the transpose of the root
    /// matrix of w (the two lattices are dual bases under the Cartan
    /// pairing), so no linear solve is needed.
    pub fn inverse(&self) -> WeylElement {
        WeylElement {
            on_weights: self.on_roots.transpose(),
            on_roots: self.on_weights.transpose(),
        }
    }

    /// True for the identity element.
    pub fn is_identity(&self) -> bool {
        self.on_weights.is_identity()
    }

    /// The matrix on the weight lattice (column i = image of ω_{i+1}).
    pub fn weight_matrix(&self) -> &IntMatrix {
        &self.on_weights
    }

    /// The matrix on the root lattice (column i = image of α_{i+1}).
    pub fn root_matrix(&self) -> &IntMatrix {
        &self.on_roots
    }

    /// Image of a weight, in ω-coordinates.
    pub fn apply_weight(&self, w: &Weight) -> Weight {
        Weight::new(self.on_weights.mul_vec(w.coords()))
    }

    /// Image of a root-lattice vector, in α-coordinates.
    pub fn apply_root(&self, r: &Root) -> Root {
        Root::new(self.on_roots.mul_vec(r.coeffs()))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|beta| !self.apply_root(beta).is_positive())
            .count()
    }

    /// True iff right-multiplying by the reflection at `i` shortens the
    /// element, i.e. w(α_i) is a negative root.
    pub fn is_right_descent(&self, i: usize) -> bool {
        // Column i of the root matrix is w(α_i); roots have uniform sign.
        self.on_roots.col(i - 1).iter().any(|&c| c < 0)
    }

    /// True iff left-multiplying by the reflection at `i` shortens the
    /// element, i.e. w⁻¹(α_i) is a negative root.
    pub fn is_left_descent(&self, i: usize) -> bool {
        // Column i of the root matrix of w⁻¹ equals row i of on_weights.
        self.on_weights.row(i - 1).iter().any(|&c| c < 0)
    }

    /// All right descents, ascending.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| self.is_right_descent(i))
            .collect()
    }

    /// All left descents, ascending.
    pub fn left_descents(&self) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| self.is_left_descent(i))
            .collect()
    }
}

/// A subset J of the vertex set, naming the parabolic subgroup generated by
/// the reflections at its members.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet {
    rank: usize,
    members: BTreeSet<usize>,
}

impl GeneratorSet {
    /// Builds a generator set, validating membership against the rank.
    pub fn new(rank: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        for &i in &members {
            if i == 0 || i > rank {
                return Err(Error::LetterOutOfRange { letter: i, rank });
            }
        }
        Ok(GeneratorSet { rank, members })
    }

    /// All vertices except `i`: the generator set of the stabilizer of the
    /// i-th fundamental weight.
    pub fn all_but(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::LetterOutOfRange { letter: i, rank });
        }
        Ok(GeneratorSet {
            rank,
            members: (1..=rank).filter(|&j| j != i).collect(),
        })
    }

    /// Membership test.
    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

/// Product of the word `(i1, ..., im)` as `s_{i1} ∘ ... ∘ s_{im}` with the
/// rightmost letter acting first.
pub fn word_to_element(rs: &RootSystem, letters: &[usize]) -> Result<WeylElement> {
    rs.check_letters(letters)?;
    let mut w = WeylElement::identity(rs.rank());
    for &l in letters {
        w = w.compose(&WeylElement::generator(rs, l)?);
    }
    Ok(w)
}

/// All left-to-right partial products of a word: entry j is the element of
/// the first j letters, entry 0 the identity.
pub fn prefix_elements(rs: &RootSystem, letters: &[usize]) -> Result<Vec<WeylElement>> {
    rs.check_letters(letters)?;
    let mut out = Vec::with_capacity(letters.len() + 1);
    out.push(WeylElement::identity(rs.rank()));
    for &l in letters {
        let next = out
            .last()
            .expect("seeded with identity")
            .compose(&WeylElement::generator(rs, l)?);
        out.push(next);
    }
    Ok(out)
}

/// True iff the word is a reduced expression: no step multiplies into a
/// right descent.
pub fn is_reduced(rs: &RootSystem, letters: &[usize]) -> Result<bool> {
    rs.check_letters(letters)?;
    let mut w = WeylElement::identity(rs.rank());
    for &l in letters {
        if w.is_right_descent(l) {
            return Ok(false);
        }
        w = w.compose(&WeylElement::generator(rs, l)?);
    }
    Ok(true)
}

/// The longest element w₀, built by greedily appending ascents.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let n = rs.rank();
    let mut w = WeylElement::identity(n);
    loop {
        let Some(i) = (1..=n).find(|&i| !w.is_right_descent(i)) else {
            return w;
        };
        w = w.compose(&WeylElement::generator(rs, i).expect("vertex in range"));
    }
}

/// The lexicographically smallest reduced word of `w`: repeatedly peel the
/// smallest left descent.
pub fn lex_min_word(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let mut u = w.clone();
    let mut word = Vec::new();
    loop {
        let Some(i) = (1..=rs.rank()).find(|&i| u.is_left_descent(i)) else {
            assert!(u.is_identity(), "descent peeling must end at the identity");
            return word;
        };
        word.push(i);
        u = WeylElement::generator(rs, i)
            .expect("vertex in range")
            .compose(&u);
    }
}

/// The minimal-length representative of the coset w·W_J, obtained by
/// stripping right descents that lie in J.
pub fn min_coset_rep(rs: &RootSystem, w: &WeylElement, j: &GeneratorSet) -> WeylElement {
    let mut u = w.clone();
    loop {
        let Some(d) = j.iter().find(|&d| u.is_right_descent(d)) else {
            return u;
        };
        u = u.compose(&WeylElement::generator(rs, d).expect("vertex in range"));
    }
}

/// The minimal-length element of the double coset W_J·x·W_K, obtained by
/// alternately stripping left descents in J and right descents in K until
/// neither side can shorten the element.
pub fn min_double_coset_rep(
    rs: &RootSystem,
    x: &WeylElement,
    j: &GeneratorSet,
    k: &GeneratorSet,
) -> WeylElement {
    let mut u = x.clone();
    loop {
        let mut changed = false;
        while let Some(d) = j.iter().find(|&d| u.is_left_descent(d)) {
            u = WeylElement::generator(rs, d)
                .expect("vertex in range")
                .compose(&u);
            changed = true;
        }
        while let Some(d) = k.iter().find(|&d| u.is_right_descent(d)) {
            u = u.compose(&WeylElement::generator(rs, d).expect("vertex in range"));
            changed = true;
        }
        if !changed {
            return u;
        }
    }
}

/// Whether the cosets w·Stab(ω_i) and w2·Stab(ω_j) intersect, i.e. are
/// adjacent faces in the Coxeter complex. Requires distinct fundamental
/// indices; adjacency is defined across distinct vertex classes.
pub fn coset_adjacent(
    rs: &RootSystem,
    w: &WeylElement,
    i: usize,
    w2: &WeylElement,
    j: usize,
) -> Result<bool> {
    rs.check_letters(&[i, j])?;
    if i == j {
        return Err(Error::SameFundamentalIndex(i));
    }
    let x = w.inverse().compose(w2);
    let jset = GeneratorSet::all_but(rs.rank(), i)?;
    let kset = GeneratorSet::all_but(rs.rank(), j)?;
    Ok(min_double_coset_rep(rs, &x, &jset, &kset).is_identity())
}

/// The full W-orbit of a weight, as a set.
pub fn weight_orbit(rs: &RootSystem, start: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start.clone()];
    while let Some(w) = frontier.pop() {
        for i in 1..=rs.rank() {
            let img = rs.reflect_weight(i, &w);
            if seen.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }
    seen
}
