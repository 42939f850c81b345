use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Sparse integer matrix: only nonzero entries are stored, keyed by
/// `(row, col)`. Entries are arbitrary-precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

#[derive(Debug, Error)]
pub enum CoordParseError {
    #[error("missing or malformed header line (want `rows cols nnz`)")]
    BadHeader,
    #[error("line {0}: expected `i j v` triple")]
    BadTriple(usize),
    #[error("line {0}: index out of range")]
    IndexOutOfRange(usize),
    #[error("entry count {found} disagrees with header nnz {declared}")]
    NnzMismatch { declared: usize, found: usize },
}

impl SparseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_triples<I, V>(rows: usize, cols: usize, triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, V)>,
        V: Into<BigInt>,
    {
        let mut m = Self::zero(rows, cols);
        for (i, j, v) in triples {
            m.add_to(i, j, &v.into());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sets entry `(i, j)`; storing a zero removes the entry.
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `v` to entry `(i, j)`, dropping the entry if it becomes zero.
    pub fn add_to(&mut self, i: usize, j: usize, v: &BigInt) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        if v.is_zero() {
            return;
        }
        let cur = self.entries.remove(&(i, j));
        let next = match cur {
            Some(c) => c + v,
            None => v.clone(),
        };
        if !next.is_zero() {
            self.entries.insert((i, j), next);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn transpose(&self) -> SparseIntMatrix {
        let mut t = SparseIntMatrix::zero(self.cols, self.rows);
        for (i, j, v) in self.iter() {
            t.set(j, i, v.clone());
        }
        t
    }

    /// Sparse product `self * other`. Panics on shape mismatch.
    pub fn mul(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in sparse product: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        // Row-major view of `other` for the accumulation pass.
        let mut other_rows: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (i, j, v) in other.iter() {
            other_rows[i].push((j, v));
        }
        let mut out = SparseIntMatrix::zero(self.rows, other.cols);
        for (i, k, v) in self.iter() {
            for &(j, w) in &other_rows[k] {
                out.add_to(i, j, &(v * w));
            }
        }
        out
    }

    /// Writes the coordinate interchange format: a `rows cols nnz` header
    /// followed by one `i j v` triple per line, 1-based, row-major order.
    pub fn to_coord_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {}", self.rows, self.cols, self.nnz());
        for (i, j, v) in self.iter() {
            let _ = writeln!(s, "{} {} {}", i + 1, j + 1, v);
        }
        s
    }

    /// Parses the coordinate interchange format produced by
    /// [`to_coord_text`](Self::to_coord_text).
    pub fn from_coord_text(text: &str) -> Result<SparseIntMatrix, CoordParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (_, header) = lines.next().ok_or(CoordParseError::BadHeader)?;
        let mut it = header.split_whitespace();
        let rows: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(CoordParseError::BadHeader)?;
        let cols: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(CoordParseError::BadHeader)?;
        let nnz: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(CoordParseError::BadHeader)?;
        let mut m = SparseIntMatrix::zero(rows, cols);
        let mut found = 0usize;
        for (lineno, line) in lines {
            let mut it = line.split_whitespace();
            let i: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(CoordParseError::BadTriple(lineno + 1))?;
            let j: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(CoordParseError::BadTriple(lineno + 1))?;
            let v: BigInt = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or(CoordParseError::BadTriple(lineno + 1))?;
            if i == 0 || j == 0 || i > rows || j > cols {
                return Err(CoordParseError::IndexOutOfRange(lineno + 1));
            }
            m.set(i - 1, j - 1, v);
            found += 1;
        }
        if found != nnz {
            return Err(CoordParseError::NnzMismatch {
                declared: nnz,
                found,
            });
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_are_not_stored() {
        let mut m = SparseIntMatrix::zero(3, 3);
        m.set(0, 0, BigInt::from(5));
        m.add_to(0, 0, &BigInt::from(-5));
        assert_eq!(m.nnz(), 0);
        m.set(1, 2, BigInt::from(7));
        m.set(1, 2, BigInt::from(0));
        assert_eq!(m.nnz(), 0);
    }

    #[test]
    fn coord_text_round_trip() {
        let m = SparseIntMatrix::from_triples(3, 4, vec![(0, 0, 2), (2, 3, -7), (1, 1, 1)]);
        let text = m.to_coord_text();
        let back = SparseIntMatrix::from_coord_text(&text).unwrap();
        assert_eq!(m, back);
        assert_eq!(back.to_coord_text(), text);
    }

    #[test]
    fn sparse_product_matches_hand_computation() {
        let a = SparseIntMatrix::from_triples(2, 3, vec![(0, 0, 1), (0, 2, 2), (1, 1, -3)]);
        let b = SparseIntMatrix::from_triples(3, 2, vec![(0, 0, 4), (2, 0, 1), (1, 1, 5)]);
        let c = a.mul(&b);
        assert_eq!(c.get(0, 0), BigInt::from(6)); // 1*4 + 2*1
        assert_eq!(c.get(1, 1), BigInt::from(-15));
        assert_eq!(c.nnz(), 2);
    }
}
