//! Orientations of the Dynkin diagram and the structures they carry: sink
//! reflections, the Ringel form and its weight map, adapted words, the
//! Coxeter element of an orientation, and per-level cardinalities.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::rootsys::{DynkinType, Family, Root, RootSystem, Weight};
use crate::weyl::{self, WeylElement};
use crate::words::{self, CommClass, ReducedWord};

/// An orientation of the Dynkin diagram: one directed arrow per edge.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Orientation {
    dynkin: DynkinType,
    arrows: BTreeSet<(usize, usize)>,
}

impl Orientation {
    /// Builds an orientation from directed pairs, requiring exactly one
    /// arrow per diagram edge.
    pub fn new(
        dynkin: DynkinType,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = dynkin.edges().into_iter().collect();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut directed = BTreeSet::new();
        for (a, b) in arrows {
            let key = (a.min(b), a.max(b));
            if !edges.contains(&key) {
                return Err(Error::InvalidOrientation(format!(
                    "{a}>{b} is not an edge of {dynkin}"
                )));
            }
            if !seen.insert(key) {
                return Err(Error::InvalidOrientation(format!(
                    "edge between {} and {} directed twice",
                    key.0, key.1
                )));
            }
            directed.insert((a, b));
        }
        if seen.len() != edges.len() {
            let missing = edges
                .difference(&seen)
                .next()
                .expect("some edge is missing");
            return Err(Error::InvalidOrientation(format!(
                "edge between {} and {} has no direction",
                missing.0, missing.1
            )));
        }
        Ok(Orientation {
            dynkin,
            arrows: directed,
        })
    }

    /// Parses the CLI syntax `1>2,3>2`.
    pub fn parse(dynkin: DynkinType, s: &str) -> Result<Self> {
        let mut arrows = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let Some((a, b)) = part.split_once('>') else {
                return Err(Error::InvalidOrientation(format!(
                    "expected arrows like 1>2, got {part:?}"
                )));
            };
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidOrientation(format!("bad vertex {x:?}")))
            };
            arrows.push((parse(a)?, parse(b)?));
        }
        Orientation::new(dynkin, arrows)
    }

    /// Every orientation of the diagram, in a fixed order: edge k of the
    /// canonical edge list points min-to-max when bit k of the index is 0.
    pub fn all(dynkin: DynkinType) -> Vec<Orientation> {
        let edges = dynkin.edges();
        (0..1usize << edges.len())
            .map(|mask| {
                let arrows =
                    edges.iter().enumerate().map(
                        |(k, &(a, b))| {
                            if mask >> k & 1 == 0 {
                                (a, b)
                            } else {
                                (b, a)
                            }
                        },
                    );
                Orientation::new(dynkin, arrows).expect("edge list is exact")
            })
            .collect()
    }

    /// The underlying diagram type.
    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    /// Directed arrows, sorted.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arrows.iter().copied()
    }

    /// True if the arrow `i -> j` is present.
    pub fn has_arrow(&self, i: usize, j: usize) -> bool {
        self.arrows.contains(&(i, j))
    }

    /// Vertices with no outgoing arrows.
    pub fn sinks(&self) -> Vec<usize> {
        (1..=self.dynkin.rank())
            .filter(|&v| self.arrows.iter().all(|&(a, _)| a != v))
            .collect()
    }

    /// Vertices with no incoming arrows.
    pub fn sources(&self) -> Vec<usize> {
        (1..=self.dynkin.rank())
            .filter(|&v| self.arrows.iter().all(|&(_, b)| b != v))
            .collect()
    }

    /// Reverses every arrow ending at the sink `k`, turning it into a
    /// source.
    pub fn reflect_sink(&self, k: usize) -> Result<Orientation> {
        if !self.sinks().contains(&k) {
            return Err(Error::NotSink(k));
        }
        let arrows = self
            .arrows
            .iter()
            .map(|&(a, b)| if b == k { (b, a) } else { (a, b) })
            .collect();
        Ok(Orientation {
            dynkin: self.dynkin,
            arrows,
        })
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (a, b)) in self
            .dynkin
            .edges()
            .into_iter()
            .map(|(a, b)| if self.has_arrow(a, b) { (a, b) } else { (b, a) })
            .enumerate()
        {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}>{b}")?;
        }
        Ok(())
    }
}

/// The bilinear form of an orientation: 1 on the diagonal, -1 at (i,j) for
/// each arrow i -> j, 0 elsewhere. Unimodular, so the induced linear map
/// from the root lattice to the weight lattice is invertible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingelForm {
    matrix: IntMatrix,
}

impl RingelForm {
    /// Builds the form of an orientation.
    pub fn new(q: &Orientation) -> RingelForm {
        let n = q.dynkin().rank();
        let mut matrix = IntMatrix::identity(n);
        for (i, j) in q.arrows() {
            matrix.set(i - 1, j - 1, -1);
        }
        RingelForm { matrix }
    }

    /// The matrix (r_{ij}).
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// The weight with ω-coordinates given by column `i`: the image of the
    /// i-th simple root under the form's weight map.
    pub fn rho(&self, i: usize) -> Weight {
        Weight::new(self.matrix.col(i - 1))
    }

    /// The linear map sending each simple root to its ρ-weight, applied to
    /// a root-lattice vector; the result is in ω-coordinates.
    pub fn apply(&self, root: &Root) -> Weight {
        Weight::new(self.matrix.mul_vec(root.coeffs()))
    }

    /// The bilinear value R(a, b) = aᵀ R b on root-lattice vectors.
    pub fn value(&self, a: &Root, b: &Root) -> i64 {
        self.matrix
            .mul_vec(b.coeffs())
            .iter()
            .zip(a.coeffs())
            .map(|(x, y)| x * y)
            .sum()
    }
}

/// True when each letter in turn is a sink of the successively reflected
/// orientation. Works on words of any length, not only longest-element
/// words.
pub fn is_adapted(q: &Orientation, letters: &[usize]) -> bool {
    let mut cur = q.clone();
    for &l in letters {
        match cur.reflect_sink(l) {
            Ok(next) => cur = next,
            Err(_) => return false,
        }
    }
    true
}

/// The canonical adapted longest-element word of an orientation: at each
/// step, reflect at the least-index sink that keeps the word reduced. Not
/// every sink does — reflecting 1 after the prefix (3,2,1,3,2) of the
/// ascending-path word cancels — so the search backtracks, and the result
/// is the lexicographically least member of the adapted class.
pub fn adapted_word(rs: &RootSystem, q: &Orientation) -> ReducedWord {
    fn extend(
        rs: &RootSystem,
        cur: &Orientation,
        elem: &WeylElement,
        letters: &mut Vec<usize>,
        total: usize,
    ) -> bool {
        if letters.len() == total {
            return true;
        }
        for k in cur.sinks() {
            if elem.is_right_descent(k) {
                continue;
            }
            let gen = WeylElement::generator(rs, k).expect("sinks are vertices");
            let next = cur.reflect_sink(k).expect("chosen vertex is a sink");
            letters.push(k);
            if extend(rs, &next, &elem.compose(&gen), letters, total) {
                return true;
            }
            letters.pop();
        }
        false
    }

    let mut letters = Vec::with_capacity(rs.num_positive_roots());
    let found = extend(
        rs,
        q,
        &WeylElement::identity(rs.rank()),
        &mut letters,
        rs.num_positive_roots(),
    );
    assert!(found, "every orientation admits an adapted longest word");
    ReducedWord::new(rs, letters).expect("descent checks keep the word reduced")
}

/// The unique commutation class of longest-element words adapted to an
/// orientation.
pub fn adapted_class(rs: &RootSystem, q: &Orientation) -> CommClass {
    words::normal_form(rs, &adapted_word(rs, q))
}

/// The only orientation a word could be adapted to, if any: each edge must
/// point toward whichever endpoint occurs first in the word (reflections
/// elsewhere never touch the edge before that moment).
pub fn adapted_orientation(rs: &RootSystem, word: &ReducedWord) -> Option<Orientation> {
    let first_use = |v: usize| word.letters().iter().position(|&l| l == v);
    let arrows: Vec<(usize, usize)> = rs
        .dynkin()
        .edges()
        .into_iter()
        .map(|(a, b)| match (first_use(a), first_use(b)) {
            (Some(fa), Some(fb)) if fb < fa => (a, b),
            (None, Some(_)) => (a, b),
            _ => (b, a),
        })
        .collect();
    let q = Orientation::new(rs.dynkin(), arrows).expect("edges enumerated exactly once");
    is_adapted(&q, word.letters()).then_some(q)
}

/// A renumbering of all vertices compatible with the arrows: each entry is
/// a sink of the orientation reflected at all earlier entries. This is the
/// least such enumeration; any other yields the same Coxeter element.
pub fn coxeter_word(q: &Orientation) -> Vec<usize> {
    let n = q.dynkin().rank();
    let mut cur = q.clone();
    let mut used = vec![false; n + 1];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let k = cur
            .sinks()
            .into_iter()
            .find(|&v| !used[v])
            .expect("unused vertices always contain a sink");
        used[k] = true;
        order.push(k);
        cur = cur.reflect_sink(k).expect("chosen vertex is a sink");
    }
    order
}

/// The Coxeter element of an orientation: the product of all simple
/// reflections with sinks acting first, well-defined independently of the
/// chosen compatible renumbering.
pub fn coxeter_element(rs: &RootSystem, q: &Orientation) -> WeylElement {
    let mut letters = coxeter_word(q);
    letters.reverse();
    weyl::word_to_element(rs, &letters).expect("an enumeration of vertices is reduced")
}

/// Number of positions carrying letter `i` in any longest-element word
/// adapted to the orientation.
pub fn level_size(rs: &RootSystem, q: &Orientation, i: usize) -> usize {
    adapted_word(rs, q)
        .letters()
        .iter()
        .filter(|&&l| l == i)
        .count()
}

/// Type-A closed formula for the level size: (n + 1 + a - b) / 2 where a
/// counts the arrows on the unoriented path from i to i* directed toward i
/// and b those directed toward i*.
pub fn level_size_by_path(rs: &RootSystem, q: &Orientation, i: usize) -> Result<usize> {
    if rs.dynkin().family() != Family::A {
        return Err(Error::TypeAOnly);
    }
    rs.check_letters(&[i])?;
    let n = rs.rank();
    let star = rs.star(i); // n + 1 - i in type A
    let (lo, hi) = (i.min(star), i.max(star));
    let mut toward_lo = 0i64;
    let mut toward_hi = 0i64;
    for v in lo..hi {
        if q.has_arrow(v, v + 1) {
            toward_hi += 1;
        } else {
            toward_lo += 1;
        }
    }
    let (a, b) = if i <= star {
        (toward_lo, toward_hi)
    } else {
        (toward_hi, toward_lo)
    };
    Ok(((n as i64 + 1 + a - b) / 2) as usize)
}
