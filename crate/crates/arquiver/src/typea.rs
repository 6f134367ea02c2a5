//! Type-A specializations. The Weyl group is a symmetric group, so chamber
//! weights become strictly increasing multi-indices (Young columns), the
//! Coxeter element becomes a long cycle whose contiguous segments describe
//! the levels, and reduced words draw as wiring diagrams whose left-bounded
//! zones carry the columns as labels.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::quiverform::{self, Orientation};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::words::ReducedWord;

/// A strictly increasing multi-index over the strands 1..n+1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Column {
    indices: Vec<usize>,
}

impl Column {
    /// Builds a column over `strands` strands, requiring strictly
    /// increasing entries within range.
    pub fn new(strands: usize, indices: Vec<usize>) -> Result<Column> {
        for pair in indices.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidColumn(format!(
                    "entries must strictly increase, got {} before {}",
                    pair[0], pair[1]
                )));
            }
        }
        if let Some(&first) = indices.first() {
            if first == 0 {
                return Err(Error::InvalidColumn("entries start at 1".into()));
            }
        }
        if let Some(&last) = indices.last() {
            if last > strands {
                return Err(Error::InvalidColumn(format!(
                    "entry {last} exceeds the {strands} strands"
                )));
            }
        }
        Ok(Column { indices })
    }

    /// Builds a column from any set of strand numbers.
    pub fn from_set(strands: usize, set: &BTreeSet<usize>) -> Result<Column> {
        Column::new(strands, set.iter().copied().collect())
    }

    /// The entries, strictly increasing.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Number of entries.
    pub fn size(&self) -> usize {
        self.indices.len()
    }

    /// True when `m` is an entry.
    pub fn contains(&self, m: usize) -> bool {
        self.indices.binary_search(&m).is_ok()
    }

    /// Grid rendering over all strands, dots for absent entries:
    /// `(. 1 3 .)`.
    pub fn dotted(&self, strands: usize) -> String {
        let cells: Vec<String> = (1..=strands)
            .map(|m| {
                if self.contains(m) {
                    m.to_string()
                } else {
                    ".".into()
                }
            })
            .collect();
        format!("({})", cells.join(" "))
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

fn require_type_a(rs: &RootSystem) -> Result<()> {
    if rs.dynkin().family() == Family::A {
        Ok(())
    } else {
        Err(Error::TypeAOnly)
    }
}

/// The weight of a column: each entry m contributes the m-th box weight
/// ω_m − ω_{m−1}, with ω_0 = ω_{n+1} = 0.
pub fn column_to_weight(rs: &RootSystem, column: &Column) -> Result<Weight> {
    require_type_a(rs)?;
    let n = rs.rank();
    if column.indices().last().is_some_and(|&m| m > n + 1) {
        return Err(Error::InvalidColumn(format!(
            "entry exceeds the {} strands of {}",
            n + 1,
            rs.dynkin()
        )));
    }
    let mut coords = vec![0i64; n];
    for &m in column.indices() {
        if m <= n {
            coords[m - 1] += 1;
        }
        if m >= 2 {
            coords[m - 2] -= 1;
        }
    }
    Ok(Weight::new(coords))
}

fn subsets(pool: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn walk(
        pool: usize,
        size: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for m in start..=pool {
            current.push(m);
            walk(pool, size, m + 1, current, out);
            current.pop();
        }
    }
    walk(pool, size, 1, &mut current, &mut out);
    out
}

/// The unique size-`i` column whose box weights sum to the given weight.
pub fn weight_to_column(rs: &RootSystem, weight: &Weight, i: usize) -> Result<Column> {
    require_type_a(rs)?;
    rs.check_letters(&[i])?;
    for indices in subsets(rs.rank() + 1, i) {
        let column = Column::new(rs.rank() + 1, indices).expect("subsets are increasing");
        if &column_to_weight(rs, &column)? == weight {
            return Ok(column);
        }
    }
    Err(Error::WeightNotInOrbit { index: i })
}

/// True when the larger column refines the smaller by one inserted entry;
/// equivalent to adjacency of the corresponding weight cosets.
pub fn column_adjacent(small: &Column, large: &Column) -> Result<bool> {
    if large.size() != small.size() + 1 {
        return Err(Error::ColumnSizeMismatch(small.size(), large.size()));
    }
    Ok(small.indices().iter().all(|&m| large.contains(m)))
}

/// The permutation of the strands 1..n+1 effected by a word, rightmost
/// letter applied first; entry m-1 is the image of m.
pub fn strand_permutation(rs: &RootSystem, letters: &[usize]) -> Result<Vec<usize>> {
    require_type_a(rs)?;
    rs.check_letters(letters)?;
    let mut perm: Vec<usize> = (1..=rs.rank() + 1).collect();
    for &l in letters {
        perm.swap(l - 1, l);
    }
    Ok(perm)
}

/// The Coxeter element of an orientation written as a long cycle anchored
/// at the last strand, with the per-level offsets that cut its segments.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterCycle {
    cycle: Vec<usize>,
    offsets: Vec<usize>,
}

impl CoxeterCycle {
    /// The cycle entries (a_1, ..., a_{n+1}); the last is n+1 and each
    /// entry is the Coxeter image of its right neighbor, cyclically.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Number of strands n+1.
    pub fn strands(&self) -> usize {
        self.cycle.len()
    }

    /// The 1-based cycle offset cutting level `i`'s rightmost segment.
    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i - 1]
    }

    /// The Coxeter element as a strand permutation.
    pub fn permutation(&self) -> Vec<usize> {
        let len = self.cycle.len();
        let mut perm = vec![0; len];
        for k in 0..len {
            let from = self.cycle[(k + 1) % len];
            perm[from - 1] = self.cycle[k];
        }
        perm
    }

    /// The length-`i` cyclic segment of the cycle starting at 1-based
    /// offset `start` (taken modulo the strand count), as a column.
    pub fn segment(&self, start: i64, i: usize) -> Column {
        let len = self.cycle.len() as i64;
        let set: BTreeSet<usize> = (0..i as i64)
            .map(|step| self.cycle[((start - 1 + step).rem_euclid(len)) as usize])
            .collect();
        Column::from_set(self.cycle.len(), &set).expect("cycle entries are strands")
    }

    /// Renders a column in cycle slots: slot k shows the k-th cycle entry
    /// when the column contains it, else a dot, so segments appear as
    /// contiguous bands — `(. 1 3 .)` for {1,3} over the cycle (2,1,3,4).
    pub fn dotted(&self, column: &Column) -> String {
        let cells: Vec<String> = self
            .cycle
            .iter()
            .map(|&a| {
                if column.contains(a) {
                    a.to_string()
                } else {
                    ".".into()
                }
            })
            .collect();
        format!("({})", cells.join(" "))
    }
}

/// Writes the Coxeter element of a type-A orientation as a cycle and
/// computes the level offsets: the first offset is n+1, and each next level
/// keeps its predecessor's offset exactly when the arrow between the dual
/// vertex and its successor points forward.
pub fn cycle_writing(rs: &RootSystem, q: &Orientation) -> Result<CoxeterCycle> {
    require_type_a(rs)?;
    let n = rs.rank();
    let mut reversed = quiverform::coxeter_word(q);
    reversed.reverse();
    let perm = strand_permutation(rs, &reversed)?;

    let mut cycle = vec![0; n + 1];
    cycle[n] = n + 1;
    for k in (0..n).rev() {
        cycle[k] = perm[cycle[k + 1] - 1];
    }
    let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
    assert_eq!(
        distinct.len(),
        n + 1,
        "a type-A Coxeter element is a long cycle"
    );

    let mut offsets = vec![n + 1; n];
    for i in 2..=n {
        let star = rs.star(i);
        let keep = q.has_arrow(star, star + 1);
        let prev = offsets[i - 2];
        offsets[i - 1] = if keep {
            prev
        } else if prev == 1 {
            n + 1
        } else {
            prev - 1
        };
    }

    let result = CoxeterCycle { cycle, offsets };
    for i in 1..=n {
        let tail: BTreeSet<usize> = (rs.star(i) + 1..=n + 1).collect();
        let segment: BTreeSet<usize> = result
            .segment(result.offset(i) as i64, i)
            .indices()
            .iter()
            .copied()
            .collect();
        assert_eq!(
            segment, tail,
            "level {i}'s anchor segment lists the strands after the dual vertex"
        );
    }
    Ok(result)
}

/// The per-level column sequences of an orientation's adapted class, read
/// off the Coxeter cycle: level i lists the segments at offsets m̄_i − j
/// for j = N_i−1 down to 0.
pub fn level_columns(rs: &RootSystem, q: &Orientation) -> Result<Vec<Vec<Column>>> {
    let cycle = cycle_writing(rs, q)?;
    let mut out = Vec::with_capacity(rs.rank());
    for i in 1..=rs.rank() {
        let count = quiverform::level_size(rs, q, i);
        let columns = (0..count)
            .rev()
            .map(|j| cycle.segment(cycle.offset(i) as i64 - j as i64, i))
            .collect();
        out.push(columns);
    }
    Ok(out)
}

/// A reduced word drawn as an arrangement of n+1 strands: crossing k swaps
/// the tracks at the word's k-th letter, and the zone just right of it
/// carries the strands then occupying the tracks above.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WiringDiagram {
    letters: Vec<usize>,
    states: Vec<Vec<usize>>,
    zones: Vec<Column>,
}

impl WiringDiagram {
    /// Number of strands.
    pub fn strands(&self) -> usize {
        self.states[0].len()
    }

    /// The crossing levels, top to bottom: the word's letters.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Number of crossings.
    pub fn crossing_count(&self) -> usize {
        self.letters.len()
    }

    /// Track occupancies: entry k lists, top to bottom, the strands on each
    /// track after the first k crossings.
    pub fn states(&self) -> &[Vec<usize>] {
        &self.states
    }

    /// The labels of the left-bounded zones, one per crossing in order.
    pub fn zones(&self) -> &[Column] {
        &self.zones
    }

    /// The label of the zone right of crossing k (1-based).
    pub fn zone(&self, k: usize) -> &Column {
        &self.zones[k - 1]
    }

    /// Labels of the zones unbounded to the left, top to bottom: the
    /// prefixes of the identity order.
    pub fn left_trivial_labels(&self) -> Vec<Column> {
        (0..self.strands())
            .map(|m| Column::new(self.strands(), (1..=m).collect()).expect("prefix is increasing"))
            .collect()
    }

    /// Labels of the zones unbounded to the right, top to bottom: the
    /// prefixes of the final track order.
    pub fn right_trivial_labels(&self) -> Vec<Column> {
        let last = self.states.last().expect("states include the initial one");
        (0..self.strands())
            .map(|m| {
                let set: BTreeSet<usize> = last[..m].iter().copied().collect();
                Column::from_set(self.strands(), &set).expect("tracks hold strands")
            })
            .collect()
    }

    /// Arrows between zones: (j, k) when j < k, the levels are linked, and
    /// the smaller label sits inside the larger.
    pub fn zone_arrows(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for j in 1..=self.crossing_count() {
            for k in j + 1..=self.crossing_count() {
                let (a, b) = (self.letters[j - 1], self.letters[k - 1]);
                if a.abs_diff(b) != 1 {
                    continue;
                }
                let (small, large) = if a < b {
                    (self.zone(j), self.zone(k))
                } else {
                    (self.zone(k), self.zone(j))
                };
                if column_adjacent(small, large).expect("linked levels differ by one") {
                    out.insert((j, k));
                }
            }
        }
        out
    }
}

/// Lays out a reduced word as a wiring diagram.
pub fn wiring_diagram(rs: &RootSystem, word: &ReducedWord) -> Result<WiringDiagram> {
    require_type_a(rs)?;
    let strands = rs.rank() + 1;
    let mut states = Vec::with_capacity(word.len() + 1);
    states.push((1..=strands).collect::<Vec<usize>>());
    let mut zones = Vec::with_capacity(word.len());
    for &l in word.letters() {
        let mut next = states.last().expect("seeded with the identity").clone();
        next.swap(l - 1, l);
        let set: BTreeSet<usize> = next[..l].iter().copied().collect();
        zones.push(Column::from_set(strands, &set).expect("tracks hold strands"));
        states.push(next);
    }
    Ok(WiringDiagram {
        letters: word.letters().to_vec(),
        states,
        zones,
    })
}

/// Output formats for wiring diagrams.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WiringFormat {
    /// Fixed-width character grid, crossings top to bottom.
    Text,
    /// Standalone SVG 1.1 document with integer coordinates.
    Svg,
}

/// Renders a wiring diagram deterministically.
pub fn render_wiring(wd: &WiringDiagram, format: WiringFormat) -> String {
    match format {
        WiringFormat::Text => render_text(wd),
        WiringFormat::Svg => render_svg(wd),
    }
}

fn render_text(wd: &WiringDiagram) -> String {
    let width = 2 * wd.strands() - 1;
    let state_line = |state: &[usize]| {
        state
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    out.push_str(&state_line(&wd.states()[0]));
    out.push('\n');
    for k in 1..=wd.crossing_count() {
        let level = wd.letters()[k - 1];
        let mut grid = vec![' '; width];
        grid[2 * level - 1] = 'X';
        let grid: String = grid.into_iter().collect();
        out.push_str(&format!("{grid}  level {level}  J(Z{k})={}\n", wd.zone(k)));
        out.push_str(&state_line(&wd.states()[k]));
        out.push('\n');
    }
    out
}

fn render_svg(wd: &WiringDiagram) -> String {
    let band = 60;
    let margin = 40;
    let pitch = 40;
    let width = 2 * margin + band * wd.crossing_count();
    let height = pitch * wd.strands() + 20;
    let track_y = |t: usize| (pitch * t - 20) as i64;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str("  <style>polyline { fill: none; stroke: #345; stroke-width: 2 } text { font-family: monospace; font-size: 12px; fill: #222 }</style>\n");

    for strand in 1..=wd.strands() {
        let mut points = Vec::with_capacity(wd.states().len());
        for (k, state) in wd.states().iter().enumerate() {
            let track = state
                .iter()
                .position(|&s| s == strand)
                .expect("strand is on a track")
                + 1;
            let x = margin + band * k;
            points.push(format!("{x},{}", track_y(track)));
            if k + 1 < wd.states().len() {
                points.push(format!("{},{}", x + band - 20, track_y(track)));
            }
        }
        out.push_str(&format!("  <polyline points=\"{}\"/>\n", points.join(" ")));
    }

    for strand in 1..=wd.strands() {
        out.push_str(&format!(
            "  <text x=\"8\" y=\"{}\">{strand}</text>\n",
            track_y(strand) + 4
        ));
        let last = wd.states().last().expect("states nonempty");
        let track = last
            .iter()
            .position(|&s| s == strand)
            .expect("strand is on a track")
            + 1;
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\">{strand}</text>\n",
            width - margin + 24,
            track_y(track) + 4
        ));
    }

    for k in 1..=wd.crossing_count() {
        let level = wd.letters()[k - 1];
        let x = margin + band * k - 14;
        let y = (track_y(level) + track_y(level + 1)) / 2 + 4;
        out.push_str(&format!(
            "  <text x=\"{x}\" y=\"{y}\">{}</text>\n",
            wd.zone(k)
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber;
    use crate::error::Error;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn word(rs_: &RootSystem, letters: &[usize]) -> ReducedWord {
        ReducedWord::new(rs_, letters.to_vec()).unwrap()
    }

    fn col(strands: usize, indices: &[usize]) -> Column {
        Column::new(strands, indices.to_vec()).unwrap()
    }

    #[test]
    fn column_validation_and_display() {
        assert!(Column::new(4, vec![1, 3]).is_ok());
        assert!(Column::new(4, vec![]).is_ok());
        assert!(matches!(
            Column::new(4, vec![3, 1]),
            Err(Error::InvalidColumn(_))
        ));
        assert!(matches!(
            Column::new(4, vec![2, 2]),
            Err(Error::InvalidColumn(_))
        ));
        assert!(matches!(
            Column::new(4, vec![0, 1]),
            Err(Error::InvalidColumn(_))
        ));
        assert!(matches!(
            Column::new(4, vec![1, 5]),
            Err(Error::InvalidColumn(_))
        ));
        let c = col(4, &[1, 3]);
        assert_eq!(c.to_string(), "{1,3}");
        assert_eq!(c.dotted(4), "(1 . 3 .)");
        assert_eq!(col(4, &[]).to_string(), "{}");
        assert_eq!(col(4, &[2, 3, 4]).dotted(4), "(. 2 3 4)");
    }

    #[test]
    fn columns_and_weights_convert_both_ways() {
        let a3 = rs("A3");
        let mu2 = column_to_weight(&a3, &col(4, &[3])).unwrap();
        assert_eq!(mu2.to_string(), "-w2+w3");
        let mu1 = column_to_weight(&a3, &col(4, &[1, 3])).unwrap();
        assert_eq!(mu1.to_string(), "w1-w2+w3");
        for i in 1..=3 {
            let dominant = col(4, &(1..=i).collect::<Vec<_>>());
            assert_eq!(
                column_to_weight(&a3, &dominant).unwrap(),
                a3.fundamental_weight(i)
            );
        }
        // Round trip over every column of every size.
        for i in 1..=3 {
            for indices in subsets(4, i) {
                let c = col(4, &indices);
                let w = column_to_weight(&a3, &c).unwrap();
                assert_eq!(weight_to_column(&a3, &w, i).unwrap(), c);
            }
        }
        let not_in_orbit = a3.fundamental_weight(1).scaled(2);
        assert!(matches!(
            weight_to_column(&a3, &not_in_orbit, 1),
            Err(Error::WeightNotInOrbit { index: 1 })
        ));
        let d4 = rs("D4");
        assert!(matches!(
            weight_to_column(&d4, &d4.fundamental_weight(1), 1),
            Err(Error::TypeAOnly)
        ));
    }

    #[test]
    fn column_adjacency() {
        assert!(column_adjacent(&col(4, &[1, 2]), &col(4, &[1, 2, 3])).unwrap());
        assert!(column_adjacent(&col(4, &[3]), &col(4, &[1, 3])).unwrap());
        assert!(!column_adjacent(&col(4, &[4]), &col(4, &[1, 3])).unwrap());
        assert!(matches!(
            column_adjacent(&col(4, &[1, 2]), &col(4, &[3])),
            Err(Error::ColumnSizeMismatch(2, 1))
        ));
    }

    #[test]
    fn cycle_writing_of_reference_orientations() {
        let a3 = rs("A3");
        let qp = Orientation::parse(a3.dynkin(), "1>2,3>2").unwrap();
        let cw = cycle_writing(&a3, &qp).unwrap();
        assert_eq!(cw.cycle(), &[2, 1, 3, 4]);
        assert_eq!((cw.offset(1), cw.offset(2), cw.offset(3)), (4, 3, 3));
        assert_eq!(cw.segment(4, 1).indices(), &[4]);
        assert_eq!(cw.segment(3, 2).indices(), &[3, 4]);
        assert_eq!(cw.segment(3, 3).indices(), &[2, 3, 4]);
        // The cycle reconstructs the Coxeter permutation.
        let mut reversed = quiverform::coxeter_word(&qp);
        reversed.reverse();
        assert_eq!(
            cw.permutation(),
            strand_permutation(&a3, &reversed).unwrap()
        );

        let qd = Orientation::parse(a3.dynkin(), "1>2,2>3").unwrap();
        let cwd = cycle_writing(&a3, &qd).unwrap();
        assert_eq!(cwd.cycle(), &[3, 2, 1, 4]);
        assert_eq!((cwd.offset(1), cwd.offset(2), cwd.offset(3)), (4, 4, 4));

        let d4 = rs("D4");
        let q = Orientation::all(d4.dynkin()).remove(0);
        assert!(matches!(cycle_writing(&d4, &q), Err(Error::TypeAOnly)));
    }

    #[test]
    fn level_columns_of_the_reference_orientation() {
        let a3 = rs("A3");
        let qp = Orientation::parse(a3.dynkin(), "1>2,3>2").unwrap();
        let levels = level_columns(&a3, &qp).unwrap();
        let cw = cycle_writing(&a3, &qp).unwrap();
        let rendered: Vec<Vec<String>> = levels
            .iter()
            .map(|level| level.iter().map(|c| cw.dotted(c)).collect())
            .collect();
        assert_eq!(
            rendered,
            vec![
                vec!["(. . 3 .)", "(. . . 4)"],
                vec!["(. 1 3 .)", "(. . 3 4)"],
                vec!["(. 1 3 4)", "(2 . 3 4)"],
            ]
        );
        // The rightmost column of each level is the tail segment.
        for i in 1..=3 {
            let tail: Vec<usize> = (a3.star(i) + 1..=4).collect();
            assert_eq!(levels[i - 1].last().unwrap().indices(), &tail[..]);
        }
    }

    #[test]
    fn level_columns_match_chamber_weights() {
        for t in ["A2", "A3", "A4"] {
            let r = rs(t);
            for q in Orientation::all(r.dynkin()) {
                let adapted = quiverform::adapted_word(&r, &q);
                let seq = chamber::chamber_weights(&r, &adapted);
                let levels = level_columns(&r, &q).unwrap();
                for i in 1..=r.rank() {
                    let from_weights: Vec<Column> = seq
                        .level_weights(i)
                        .iter()
                        .map(|w| weight_to_column(&r, w, i).unwrap())
                        .collect();
                    assert_eq!(levels[i - 1], from_weights, "{q} level {i}");
                }
            }
        }
    }

    #[test]
    fn wiring_zones_of_the_reference_word() {
        let a3 = rs("A3");
        let wd = wiring_diagram(&a3, &word(&a3, &[2, 1, 3, 2, 3, 1])).unwrap();
        let zones: Vec<String> = wd.zones().iter().map(|z| z.to_string()).collect();
        assert_eq!(
            zones,
            vec!["{1,3}", "{3}", "{1,3,4}", "{3,4}", "{2,3,4}", "{4}"]
        );
        // The zone labels agree with the level columns of the orientation
        // this word is adapted to.
        let qp = Orientation::parse(a3.dynkin(), "1>2,3>2").unwrap();
        let from_cycle: BTreeSet<Column> = level_columns(&a3, &qp)
            .unwrap()
            .into_iter()
            .flatten()
            .collect();
        let from_zones: BTreeSet<Column> = wd.zones().iter().cloned().collect();
        assert_eq!(from_zones, from_cycle);
        // Labels are pairwise distinct and the final order is reversed.
        assert_eq!(from_zones.len(), wd.crossing_count());
        assert_eq!(wd.states().last().unwrap(), &vec![4, 3, 2, 1]);
        assert_eq!(
            wd.left_trivial_labels()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            vec!["{}", "{1}", "{1,2}", "{1,2,3}"]
        );
        assert_eq!(
            wd.right_trivial_labels()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            vec!["{}", "{4}", "{3,4}", "{2,3,4}"]
        );
    }

    #[test]
    fn zone_arrows_match_the_coset_quiver() {
        use crate::arq;
        let a3 = rs("A3");
        for letters in [
            vec![2, 1, 3, 2, 3, 1],
            vec![2, 1, 2, 3, 2, 1],
            vec![1, 2, 1, 3, 2, 1],
        ] {
            let w = word(&a3, &letters);
            let wd = wiring_diagram(&a3, &w).unwrap();
            let quiver = arq::arq_from_cosets(&a3, &w);
            assert_eq!(
                wd.zone_arrows(),
                quiver.arrows().collect::<BTreeSet<_>>(),
                "{letters:?}"
            );
        }
    }

    #[test]
    fn smallest_wiring_diagrams() {
        let a1 = rs("A1");
        let wd = wiring_diagram(&a1, &word(&a1, &[1])).unwrap();
        assert_eq!(wd.crossing_count(), 1);
        assert_eq!(wd.zone(1).to_string(), "{2}");

        let a2 = rs("A2");
        let wd = wiring_diagram(&a2, &word(&a2, &[1, 2, 1])).unwrap();
        assert_eq!(wd.letters(), &[1, 2, 1]);
        let text = render_wiring(&wd, WiringFormat::Text);
        let expected = "1 2 3\n X     level 1  J(Z1)={2}\n2 1 3\n   X   level 2  J(Z2)={2,3}\n2 3 1\n X     level 1  J(Z3)={3}\n3 2 1\n";
        assert_eq!(text, expected);
        let d4 = rs("D4");
        let w = crate::words::longest_word(&d4);
        assert!(matches!(wiring_diagram(&d4, &w), Err(Error::TypeAOnly)));
    }

    #[test]
    fn svg_rendering_is_stable_and_well_formed() {
        let a3 = rs("A3");
        let wd = wiring_diagram(&a3, &word(&a3, &[2, 1, 3, 2, 3, 1])).unwrap();
        let svg = render_wiring(&wd, WiringFormat::Svg);
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polyline").count(), 4);
        assert!(svg.contains("{1,3}"));
        assert_eq!(svg, render_wiring(&wd, WiringFormat::Svg));
    }
}
