//! Small square integer matrices.
//!
//! Everything in this crate acts on lattices of rank at most nine, so a
//! row-major `Vec<i64>` is plenty. All arithmetic is exact.

use std::fmt;

/// A square integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    /// The zero matrix of size `n`.
    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from its rows. Panics if the rows are not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "rows must form a square matrix"
        );
        IntMatrix {
            n,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    /// Side length.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at row `r`, column `c` (0-based).
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.n + c]
    }

    /// Sets the entry at row `r`, column `c` (0-based).
    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.entries[r * self.n + c] = v;
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "size mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    out.entries[r * n + c] += a * other.get(k, c);
                }
            }
        }
        out
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.n, v.len(), "size mismatch");
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Entry-wise negation.
    pub fn neg(&self) -> Self {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&x| -x).collect(),
        }
    }

    /// Column `c` as a vector.
    pub fn col(&self, c: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.get(r, c)).collect()
    }

    /// Row `r` as a vector.
    pub fn row(&self, r: usize) -> Vec<i64> {
        self.entries[r * self.n..(r + 1) * self.n].to_vec()
    }

    /// Determinant by fraction-free (Bareiss) elimination; exact.
    pub fn det(&self) -> i64 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<Vec<i64>> = (0..n).map(|r| self.row(r)).collect();
        let mut sign = 1i64;
        let mut prev = 1i64;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                let swap = (k + 1..n).find(|&r| a[r][k] != 0);
                match swap {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
                }
                a[r][k] = 0;
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
    }

    /// True if this is the identity matrix.
    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| (0..self.n).all(|c| self.get(r, c) == i64::from(r == c)))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.n {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}
