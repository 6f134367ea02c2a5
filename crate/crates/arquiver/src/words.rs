//! Reduced words, the total orders they induce on positive roots, and
//! commutation classes with trace-monoid normal forms.
//!
//! Two reduced words are commutation-equivalent when one turns into the
//! other by swapping adjacent letters whose reflections commute (2-moves).
//! Classes are represented canonically by a greedy layered normal form, and
//! the set of all classes of longest-element words is explored by
//! breadth-first search across braid moves (3-moves).

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::rootsys::{Root, RootSystem};
use crate::weyl::{self, WeylElement};

/// A validated reduced expression together with the element it spells.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReducedWord {
    letters: Vec<usize>,
    target: WeylElement,
}

impl ReducedWord {
    /// Validates that the letters form a reduced expression.
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        rs.check_letters(&letters)?;
        let mut target = WeylElement::identity(rs.rank());
        for &l in &letters {
            if target.is_right_descent(l) {
                return Err(Error::NotReduced);
            }
            target = target.compose(&WeylElement::generator(rs, l)?);
        }
        Ok(ReducedWord { letters, target })
    }

    /// The letter sequence.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// The group element the word spells.
    pub fn target(&self) -> &WeylElement {
        &self.target
    }

    /// Word length.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True if this word spells the longest element (its length is the
    /// number of positive roots).
    pub fn is_longest(&self, rs: &RootSystem) -> bool {
        self.letters.len() == rs.num_positive_roots()
    }

    /// Errors unless the word spells the longest element.
    pub fn require_longest(&self, rs: &RootSystem) -> Result<()> {
        if self.is_longest(rs) {
            Ok(())
        } else {
            Err(Error::NotLongestWord {
                len: self.letters.len(),
                expected: rs.num_positive_roots(),
            })
        }
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, self.letters.iter().copied())
    }
}

/// Writes letters as comma-separated values, the same syntax the CLI reads.
fn write_csv(f: &mut fmt::Formatter<'_>, letters: impl Iterator<Item = usize>) -> fmt::Result {
    for (k, l) in letters.enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{}", l)?;
    }
    Ok(())
}

/// The canonical reduced word of the longest element: lexicographically
/// smallest, by peeling smallest left descents.
pub fn longest_word(rs: &RootSystem) -> ReducedWord {
    let w0 = weyl::longest_element(rs);
    let letters = weyl::lex_min_word(rs, &w0);
    ReducedWord::new(rs, letters).expect("descent peeling yields a reduced word")
}

/// The sequence of positive roots singled out by the successive prefixes of
/// a reduced word: entry j is the image of the j-th letter's simple root
/// under the product of the first j-1 letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootOrder {
    letters: Vec<usize>,
    roots: Vec<Root>,
}

impl RootOrder {
    /// Builds the root order of a reduced word.
    pub fn from_word(rs: &RootSystem, word: &ReducedWord) -> RootOrder {
        let mut prefix = WeylElement::identity(rs.rank());
        let mut roots = Vec::with_capacity(word.len());
        for &l in word.letters() {
            roots.push(prefix.apply_root(&rs.simple_root(l)));
            prefix = prefix.compose(&WeylElement::generator(rs, l).expect("validated letter"));
        }
        RootOrder {
            letters: word.letters().to_vec(),
            roots,
        }
    }

    /// The ordered roots.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// The source word's letters.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// 1-based positions whose letter is `i`, in order.
    pub fn level_positions(&self, i: usize) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == i)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// The roots at the positions whose letter is `i`, in order.
    pub fn level_roots(&self, i: usize) -> Vec<Root> {
        self.level_positions(i)
            .into_iter()
            .map(|k| self.roots[k - 1].clone())
            .collect()
    }

    /// 1-based position of a root in the order.
    pub fn position_of(&self, root: &Root) -> Option<usize> {
        self.roots.iter().position(|r| r == root).map(|k| k + 1)
    }

    /// True if every two entries summing to a positive root sandwich their
    /// sum.
    pub fn is_convex(&self, rs: &RootSystem) -> bool {
        is_convex_sequence(rs, &self.roots)
    }
}

/// Convexity of an arbitrary sequence of positive roots: whenever two
/// entries sum to a positive root, that sum must appear strictly between
/// them.
pub fn is_convex_sequence(rs: &RootSystem, roots: &[Root]) -> bool {
    let position: HashMap<&Root, usize> = roots.iter().enumerate().map(|(k, r)| (r, k)).collect();
    for j in 0..roots.len() {
        for k in j + 1..roots.len() {
            let sum = roots[j].plus(&roots[k]);
            if rs.positive_root_index(&sum).is_some() {
                match position.get(&sum) {
                    Some(&p) if j < p && p < k => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// True when the two letters cannot be swapped freely: equal, or joined by
/// a diagram edge.
fn dependent(rs: &RootSystem, a: usize, b: usize) -> bool {
    a == b || rs.linked(a, b)
}

/// A commutation class in layered normal form: maximal successive blocks of
/// pairwise-commuting letters, each block sorted ascending. Two reduced
/// words are commutation-equivalent exactly when they normalize to the same
/// layers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CommClass {
    layers: Vec<Vec<usize>>,
}

/// Computes the layered normal form of a reduced word's commutation class:
/// each letter drops into the earliest layer after the last letter it
/// depends on.
pub fn normal_form(rs: &RootSystem, word: &ReducedWord) -> CommClass {
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for &l in word.letters() {
        let mut depth = 0;
        for (t, layer) in layers.iter().enumerate() {
            if layer.iter().any(|&x| dependent(rs, x, l)) {
                depth = t + 1;
            }
        }
        if depth == layers.len() {
            layers.push(Vec::new());
        }
        layers[depth].push(l);
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    CommClass { layers }
}

impl CommClass {
    /// The layers of the normal form.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// The normal form flattened to a single word.
    pub fn word(&self) -> Vec<usize> {
        self.layers.iter().flatten().copied().collect()
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.layers.iter().map(|l| l.len()).sum()
    }

    /// True for the class of the empty word.
    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// The normal form as a validated reduced word.
    pub fn reduced_word(&self, rs: &RootSystem) -> ReducedWord {
        ReducedWord::new(rs, self.word()).expect("a normal form of a reduced word is reduced")
    }
}

impl fmt::Display for CommClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, self.word().into_iter())
    }
}

/// Dependence data for one class: for each position of the normal-form
/// word, the bitset of positions it (transitively) depends on, itself
/// included.
struct Dependence {
    word: Vec<usize>,
    ancestors: Vec<u128>,
}

fn dependence(rs: &RootSystem, cls: &CommClass) -> Dependence {
    let word = cls.word();
    assert!(
        word.len() <= 128,
        "dependence bitsets limited to 128 events"
    );
    let mut ancestors: Vec<u128> = Vec::with_capacity(word.len());
    for (e, &l) in word.iter().enumerate() {
        let mut set: u128 = 1 << e;
        for d in 0..e {
            if dependent(rs, word[d], l) {
                set |= ancestors[d];
            }
        }
        ancestors.push(set);
    }
    Dependence { word, ancestors }
}

/// All classes one braid move away: for every diagram edge, every
/// consecutive triple x,y,x in the two-letter chain whose dependence
/// interval contains nothing else can be flipped to y,x,y.
pub fn braid_neighbors(rs: &RootSystem, cls: &CommClass) -> BTreeSet<CommClass> {
    let dep = dependence(rs, cls);
    let m = dep.word.len();
    let mut out = BTreeSet::new();
    for &(a, b) in rs.edges() {
        let chain: Vec<usize> = (0..m)
            .filter(|&e| dep.word[e] == a || dep.word[e] == b)
            .collect();
        for t in 0..chain.len().saturating_sub(2) {
            let (p, q, r) = (chain[t], chain[t + 1], chain[t + 2]);
            let (x, y) = (dep.word[p], dep.word[q]);
            if dep.word[r] != x || x == y {
                continue;
            }
            // The move needs p,q,r adjacent in some member word, i.e. no
            // other event both above p and below r.
            let blocked = (0..m).any(|z| {
                z != p
                    && z != q
                    && z != r
                    && dep.ancestors[r] >> z & 1 == 1
                    && dep.ancestors[z] >> p & 1 == 1
            });
            if blocked {
                continue;
            }
            let mut letters = Vec::with_capacity(m);
            for e in 0..m {
                if dep.ancestors[r] >> e & 1 == 1 && e != p && e != q && e != r {
                    letters.push(dep.word[e]);
                }
            }
            letters.extend([y, x, y]);
            for e in 0..m {
                if dep.ancestors[r] >> e & 1 == 0 {
                    letters.push(dep.word[e]);
                }
            }
            let word = ReducedWord::new(rs, letters).expect("a braid move preserves reducedness");
            out.insert(normal_form(rs, &word));
        }
    }
    out
}

/// Resource limits for the class census.
#[derive(Clone, Debug)]
pub struct CensusBudget {
    /// Abort once more than this many classes have been discovered.
    pub max_classes: usize,
    /// Abort once the search has run longer than this.
    pub time_limit: Option<Duration>,
}

impl Default for CensusBudget {
    fn default() -> Self {
        CensusBudget {
            max_classes: 1000,
            time_limit: None,
        }
    }
}

impl CensusBudget {
    /// A budget large enough for the biggest supported censuses.
    pub fn extended() -> Self {
        CensusBudget {
            max_classes: 50_000,
            time_limit: None,
        }
    }

    /// Adds a wall-clock limit.
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

/// The complete set of commutation classes of longest-element words.
#[derive(Clone, Debug)]
pub struct Census {
    classes: Vec<CommClass>,
}

impl Census {
    /// The classes, sorted by normal form.
    pub fn classes(&self) -> &[CommClass] {
        &self.classes
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    /// True when no classes were found (never for a valid census).
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Explores all commutation classes of reduced longest-element words by
/// breadth-first search across braid moves, starting from the
/// lexicographically smallest word.
pub fn census(rs: &RootSystem, budget: &CensusBudget) -> Result<Census> {
    let start = Instant::now();
    let seed = normal_form(rs, &longest_word(rs));
    let mut seen: HashSet<CommClass> = HashSet::new();
    seen.insert(seed.clone());
    let mut queue: VecDeque<CommClass> = VecDeque::new();
    queue.push_back(seed);
    while let Some(cls) = queue.pop_front() {
        if let Some(limit) = budget.time_limit {
            if start.elapsed() > limit {
                return Err(Error::CensusDeadline {
                    seconds: limit.as_secs(),
                    found: seen.len(),
                });
            }
        }
        for nb in braid_neighbors(rs, &cls) {
            if seen.contains(&nb) {
                continue;
            }
            if seen.len() >= budget.max_classes {
                return Err(Error::CensusBudget {
                    budget: budget.max_classes,
                    found: seen.len() + 1,
                });
            }
            seen.insert(nb.clone());
            queue.push_back(nb);
        }
    }
    let mut classes: Vec<CommClass> = seen.into_iter().collect();
    classes.sort();
    Ok(Census { classes })
}

/// Per-occurrence consumption requirements for linear-extension walks over
/// a class: `req[i-1][t][j-1]` is how many j-letters must already be placed
/// before the t-th occurrence (0-based) of letter i may be placed.
struct ExtensionTable {
    rank: usize,
    occurrences: Vec<usize>,
    req: Vec<Vec<Vec<usize>>>,
    total: usize,
}

fn extension_table(rs: &RootSystem, cls: &CommClass) -> ExtensionTable {
    let word = cls.word();
    let n = rs.rank();
    let mut occurrences = vec![0usize; n];
    let mut req: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    let mut counts = vec![0usize; n];
    for &l in &word {
        let needs: Vec<usize> = (0..n)
            .map(|j| {
                if j + 1 != l && dependent(rs, j + 1, l) {
                    counts[j]
                } else {
                    0
                }
            })
            .collect();
        req[l - 1].push(needs);
        occurrences[l - 1] += 1;
        counts[l - 1] += 1;
    }
    ExtensionTable {
        rank: n,
        occurrences,
        req,
        total: word.len(),
    }
}

impl ExtensionTable {
    fn can_place(&self, state: &[usize], letter: usize) -> bool {
        let t = state[letter - 1];
        if t >= self.occurrences[letter - 1] {
            return false;
        }
        self.req[letter - 1][t]
            .iter()
            .enumerate()
            .all(|(j, &need)| state[j] >= need)
    }
}

/// Number of member words of a class, i.e. linear extensions of its
/// dependence order, by memoized dynamic programming on per-letter
/// consumption counts.
pub fn member_count(rs: &RootSystem, cls: &CommClass) -> u128 {
    let table = extension_table(rs, cls);
    let mut memo: HashMap<Vec<usize>, u128> = HashMap::new();

    fn walk(
        table: &ExtensionTable,
        state: &mut Vec<usize>,
        placed: usize,
        memo: &mut HashMap<Vec<usize>, u128>,
    ) -> u128 {
        if placed == table.total {
            return 1;
        }
        if let Some(&v) = memo.get(state.as_slice()) {
            return v;
        }
        let mut total = 0u128;
        for letter in 1..=table.rank {
            if table.can_place(state, letter) {
                state[letter - 1] += 1;
                total += walk(table, state, placed + 1, memo);
                state[letter - 1] -= 1;
            }
        }
        memo.insert(state.clone(), total);
        total
    }

    let mut state = vec![0usize; table.rank];
    walk(&table, &mut state, 0, &mut memo)
}

/// All member words of a class, in lexicographic order, failing if more
/// than `cap` would be produced.
pub fn class_members(rs: &RootSystem, cls: &CommClass, cap: usize) -> Result<Vec<Vec<usize>>> {
    let table = extension_table(rs, cls);
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut state = vec![0usize; table.rank];
    let mut path: Vec<usize> = Vec::with_capacity(table.total);

    fn walk(
        table: &ExtensionTable,
        state: &mut Vec<usize>,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if path.len() == table.total {
            if out.len() >= cap {
                return Err(Error::EnumerationCap { cap });
            }
            out.push(path.clone());
            return Ok(());
        }
        for letter in 1..=table.rank {
            if table.can_place(state, letter) {
                state[letter - 1] += 1;
                path.push(letter);
                walk(table, state, path, out, cap)?;
                path.pop();
                state[letter - 1] -= 1;
            }
        }
        Ok(())
    }

    walk(&table, &mut state, &mut path, &mut out, cap)?;
    Ok(out)
}

/// All reduced words of an element, in lexicographic order, failing if more
/// than `cap` would be produced.
pub fn all_reduced_words(rs: &RootSystem, w: &WeylElement, cap: usize) -> Result<Vec<Vec<usize>>> {
    fn walk(
        rs: &RootSystem,
        u: &WeylElement,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if u.is_identity() {
            if out.len() >= cap {
                return Err(Error::EnumerationCap { cap });
            }
            out.push(path.clone());
            return Ok(());
        }
        for i in 1..=rs.rank() {
            if u.is_left_descent(i) {
                let next = WeylElement::generator(rs, i)
                    .expect("vertex in range")
                    .compose(u);
                path.push(i);
                walk(rs, &next, path, out, cap)?;
                path.pop();
            }
        }
        Ok(())
    }

    let mut out = Vec::new();
    let mut path = Vec::new();
    walk(rs, w, &mut path, &mut out, cap)?;
    Ok(out)
}

/// The intersection over all member words of the pairwise root order: the
/// matrix entry (j,k) is 1 when root j precedes root k in every member.
/// Identifies the convex partial order the class induces.
pub fn class_partial_order(rs: &RootSystem, cls: &CommClass) -> IntMatrix {
    let dep = dependence(rs, cls);
    let order = RootOrder::from_word(rs, &cls.reduced_word(rs));
    let n_roots = rs.num_positive_roots();
    let mut m = IntMatrix::zero(n_roots);
    for e in 0..dep.word.len() {
        let root_e = rs
            .positive_root_index(&order.roots()[e])
            .expect("longest-element order covers all positive roots");
        for d in 0..e {
            if dep.ancestors[e] >> d & 1 == 1 {
                let root_d = rs
                    .positive_root_index(&order.roots()[d])
                    .expect("longest-element order covers all positive roots");
                m.set(root_d - 1, root_e - 1, 1);
            }
        }
    }
    m
}
