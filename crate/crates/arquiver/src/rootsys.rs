//! Simply-laced root systems with exact integer arithmetic.
//!
//! Roots are stored in simple-root coordinates, weights in fundamental-weight
//! coordinates. The Cartan matrix of an ADE diagram is symmetric, so the same
//! integer matrix converts between the two bases in one direction, and a
//! rational solve goes back.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Simply-laced Dynkin families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

/// A Dynkin type such as `A3`, `D5`, or `E6`.
///
/// Vertices are numbered 1..=n. Type A is the path 1-2-...-n. Type D is the
/// path 1-2-...-(n-2) with both n-1 and n attached to n-2. Type E is the
/// chain 1-3-4-5-6(-7-8) with vertex 2 attached to vertex 4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    /// Builds a type, enforcing the supported rank ranges
    /// (A1-A9, D4-D9, E6-E8).
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=9).contains(&rank),
            Family::D => (4..=9).contains(&rank),
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{:?}{}", family, rank)))
        }
    }

    /// The family letter.
    pub fn family(&self) -> Family {
        self.family
    }

    /// The number of vertices.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Unordered diagram edges as pairs `(i, j)` with `i < j`, 1-based.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                e.push((n - 2, n));
                e.sort_unstable();
                e
            }
            Family::E => {
                let mut e = vec![(1, 3), (2, 4), (3, 4), (4, 5), (5, 6)];
                if n >= 7 {
                    e.push((6, 7));
                }
                if n >= 8 {
                    e.push((7, 8));
                }
                e.sort_unstable();
                e
            }
        }
    }

    /// Number of positive roots, by the classical count for each family.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        DynkinType::new(fam, rank)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Renders an integer coefficient vector over a symbol basis, e.g. `a1+2a2-a3`.
fn format_combination(coeffs: &[i64], symbol: char, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if coeffs.iter().all(|&c| c == 0) {
        return write!(f, "0");
    }
    let mut first = true;
    for (idx, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else if c < 0 {
            write!(f, "-")?;
        } else {
            write!(f, "+")?;
        }
        if c.abs() != 1 {
            write!(f, "{}", c.abs())?;
        }
        write!(f, "{}{}", symbol, idx + 1)?;
        first = false;
    }
    Ok(())
}

/// A root written over the simple roots. Coefficient `i` (0-based) multiplies
/// the simple root at vertex `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    /// Builds a root vector from simple-root coefficients.
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root(coeffs)
    }

    /// Coefficient of the simple root at vertex `i` (1-based).
    pub fn coeff(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// Raw coefficients.
    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Sum of coefficients.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Roots have all coefficients of one sign; positive means the nonzero
    /// ones are positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&c| c != 0) && self.0.iter().all(|&c| c >= 0)
    }

    /// Entry-wise negation.
    pub fn negated(&self) -> Self {
        Root(self.0.iter().map(|&c| -c).collect())
    }

    /// Entry-wise sum.
    pub fn plus(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_combination(&self.0, 'a', f)
    }
}

/// A weight written over the fundamental weights. Coefficient `i` (0-based)
/// multiplies the fundamental weight at vertex `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    /// Builds a weight from fundamental-weight coefficients.
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    /// Coefficient of the fundamental weight at vertex `i` (1-based); this is
    /// the pairing with the coroot at vertex `i`.
    pub fn coeff(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    /// Raw coordinates.
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// True if every coordinate is zero.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True if every coordinate is nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Entry-wise negation.
    pub fn negated(&self) -> Self {
        Weight(self.0.iter().map(|&c| -c).collect())
    }

    /// Entry-wise sum.
    pub fn plus(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Entry-wise integer scaling.
    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|&c| k * c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_combination(&self.0, 'w', f)
    }
}

/// Canonical order on positive roots: by height, then by simple-root
/// coefficients with earlier vertices weighing more. Puts `a1` before `a2`.
fn canonical_root_cmp(a: &Root, b: &Root) -> std::cmp::Ordering {
    a.height()
        .cmp(&b.height())
        .then_with(|| b.coeffs().cmp(a.coeffs()))
}

/// A built root system: Cartan matrix, the full positive system, and the
/// involution induced by the longest Weyl element.
#[derive(Clone, Debug)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: IntMatrix,
    edges: Vec<(usize, usize)>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
    star: Vec<usize>,
}

impl RootSystem {
    /// Builds the root system of a supported ADE type.
    pub fn new(dynkin: DynkinType) -> Self {
        let n = dynkin.rank();
        let edges = dynkin.edges();
        let mut cartan = IntMatrix::zero(n);
        for i in 0..n {
            cartan.set(i, i, 2);
        }
        for &(i, j) in &edges {
            cartan.set(i - 1, j - 1, -1);
            cartan.set(j - 1, i - 1, -1);
        }

        let positive_roots = positive_closure(&cartan);
        debug_assert_eq!(positive_roots.len(), dynkin.num_positive_roots());
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k + 1))
            .collect();
        let star = star_involution(&cartan, positive_roots.len());

        RootSystem {
            dynkin,
            cartan,
            edges,
            positive_roots,
            index,
            star,
        }
    }

    /// The Dynkin type.
    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    /// Number of vertices.
    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// The Cartan matrix (0-based indexing).
    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    /// Cartan pairing of the simple roots at vertices `i` and `j` (1-based).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan.get(i - 1, j - 1)
    }

    /// True if vertices `i` and `j` are joined by a diagram edge.
    pub fn linked(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan(i, j) == -1
    }

    /// Diagram edges as pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The simple root at vertex `i`.
    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank()];
        v[i - 1] = 1;
        Root(v)
    }

    /// The fundamental weight at vertex `i`.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut v = vec![0; self.rank()];
        v[i - 1] = 1;
        Weight(v)
    }

    /// The positive roots in the canonical order (height, then coefficients).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// 1-based position of a positive root in the canonical order.
    pub fn positive_root_index(&self, root: &Root) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// True if the vector is a root (positive or negative).
    pub fn is_root(&self, root: &Root) -> bool {
        self.index.contains_key(root) || self.index.contains_key(&root.negated())
    }

    /// Pairing of a root with the coroot at vertex `i`: `(beta, alpha_i)`.
    pub fn root_pairing(&self, root: &Root, i: usize) -> i64 {
        (1..=self.rank())
            .map(|j| self.cartan(i, j) * root.coeff(j))
            .sum()
    }

    /// Symmetric bilinear form on the root lattice, normalized so that
    /// `(alpha, alpha) = 2` for every root.
    pub fn bilinear(&self, a: &Root, b: &Root) -> i64 {
        (1..=self.rank())
            .map(|i| a.coeff(i) * self.root_pairing(b, i))
            .sum()
    }

    /// A root in fundamental-weight coordinates: the Cartan matrix applied to
    /// its simple-root coordinates.
    pub fn weight_of_root(&self, root: &Root) -> Weight {
        Weight(self.cartan.mul_vec(root.coeffs()))
    }

    /// Simple-root coordinates of a weight; rational in general.
    pub fn root_coords(&self, weight: &Weight) -> Vec<Rational64> {
        solve_cartan(&self.cartan, weight.coords())
    }

    /// Rebuilds a weight from simple-root coordinates. Fails if the
    /// coordinates do not describe a lattice weight.
    pub fn weight_from_root_coords(&self, coords: &[Rational64]) -> Result<Weight> {
        let n = self.rank();
        assert_eq!(coords.len(), n, "coordinate length mismatch");
        let mut out = Vec::with_capacity(n);
        for r in 0..n {
            let mut acc = Rational64::from_integer(0);
            for (c, coord) in coords.iter().enumerate() {
                acc += Rational64::from_integer(self.cartan.get(r, c)) * coord;
            }
            if !acc.is_integer() {
                return Err(Error::NonIntegralWeight);
            }
            out.push(acc.to_integer());
        }
        Ok(Weight(out))
    }

    /// Simple reflection at vertex `i` applied to a root.
    pub fn reflect_root(&self, i: usize, root: &Root) -> Root {
        let p = self.root_pairing(root, i);
        let mut v = root.coeffs().to_vec();
        v[i - 1] -= p;
        Root(v)
    }

    /// Simple reflection at vertex `i` applied to a weight.
    pub fn reflect_weight(&self, i: usize, weight: &Weight) -> Weight {
        let p = weight.coeff(i);
        let mut v = weight.coords().to_vec();
        for j in 1..=self.rank() {
            v[j - 1] -= p * self.cartan(i, j);
        }
        Weight(v)
    }

    /// The diagram involution `i -> i*` defined by the longest element
    /// sending the simple root at `i` to minus the simple root at `i*`.
    pub fn star(&self, i: usize) -> usize {
        self.star[i - 1]
    }

    /// Validates that every letter of a word names a vertex.
    pub fn check_letters(&self, letters: &[usize]) -> Result<()> {
        let n = self.rank();
        for &l in letters {
            if l == 0 || l > n {
                return Err(Error::LetterOutOfRange { letter: l, rank: n });
            }
        }
        Ok(())
    }
}

/// Grows the positive system from the simple roots: in a simply-laced system
/// `beta + alpha_i` is a root exactly when the pairing `(beta, alpha_i)` is
/// -1, so saturating that step reaches every positive root.
fn positive_closure(cartan: &IntMatrix) -> Vec<Root> {
    let n = cartan.size();
    let mut found: Vec<Root> = (1..=n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i - 1] = 1;
            Root(v)
        })
        .collect();
    let mut seen: HashMap<Root, ()> = found.iter().map(|r| (r.clone(), ())).collect();
    let mut frontier = found.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in frontier {
            for i in 1..=n {
                let pairing: i64 = (1..=n)
                    .map(|j| cartan.get(i - 1, j - 1) * beta.coeff(j))
                    .sum();
                if pairing == -1 {
                    let mut v = beta.coeffs().to_vec();
                    v[i - 1] += 1;
                    let gamma = Root(v);
                    if seen.insert(gamma.clone(), ()).is_none() {
                        next.push(gamma);
                    }
                }
            }
        }
        found.extend(next.iter().cloned());
        frontier = next;
    }
    found.sort_by(canonical_root_cmp);
    found
}

/// Computes the longest element's action on the simple roots by repeatedly
/// multiplying by an ascent until none remains, then reads off the
/// involution from the negated images.
fn star_involution(cartan: &IntMatrix, num_positive: usize) -> Vec<usize> {
    let n = cartan.size();
    // images[j] = w(alpha_{j+1}) in simple-root coordinates.
    let mut images: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            let mut v = vec![0; n];
            v[j] = 1;
            v
        })
        .collect();
    let mut steps = 0;
    loop {
        let ascent = (0..n).find(|&j| images[j].iter().any(|&c| c > 0));
        let Some(j) = ascent else { break };
        // Right-multiplying by the reflection at vertex j+1 replaces each
        // image w(alpha_l) by w(alpha_l) - cartan[j][l] * w(alpha_j).
        let img_j = images[j].clone();
        for (l, image) in images.iter_mut().enumerate() {
            let c = cartan.get(j, l);
            if c != 0 {
                for (x, &v) in image.iter_mut().zip(&img_j) {
                    *x -= c * v;
                }
            }
        }
        steps += 1;
        assert!(
            steps <= num_positive,
            "longest-element search failed to terminate"
        );
    }
    assert_eq!(steps, num_positive, "longest element has wrong length");
    (0..n)
        .map(|i| {
            let neg = &images[i];
            let pos: Vec<i64> = neg.iter().map(|&c| -c).collect();
            let k = pos.iter().position(|&c| c == 1);
            match k {
                Some(k) if pos.iter().map(|&c| c.abs()).sum::<i64>() == 1 => k + 1,
                _ => panic!("longest element does not permute the simple roots"),
            }
        })
        .collect()
}

/// Solves `cartan * x = rhs` over the rationals by Gaussian elimination.
fn solve_cartan(cartan: &IntMatrix, rhs: &[i64]) -> Vec<Rational64> {
    let n = cartan.size();
    let mut a: Vec<Vec<Rational64>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| Rational64::from_integer(cartan.get(r, c)))
                .chain(std::iter::once(Rational64::from_integer(rhs[r])))
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&r| a[r][k] != Rational64::from_integer(0));
        let pivot = pivot.expect("Cartan matrix is invertible");
        a.swap(k, pivot);
        let p = a[k][k];
        for x in &mut a[k][k..=n] {
            *x /= p;
        }
        let lead: Vec<Rational64> = a[k][k..=n].to_vec();
        for (r, row) in a.iter_mut().enumerate() {
            if r != k && row[k] != Rational64::from_integer(0) {
                let f = row[k];
                for (x, &v) in row[k..=n].iter_mut().zip(&lead) {
                    *x -= f * v;
                }
            }
        }
    }
    (0..n).map(|r| a[r][n]).collect()
}
