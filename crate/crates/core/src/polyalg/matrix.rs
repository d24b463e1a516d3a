use std::collections::HashMap;

use super::{MPoly, PolyError};

/// Row-major matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MPoly>,
}

/// Above this size the determinant switches from plain cofactor expansion
/// to expansion with memoized minors.
const PLAIN_COFACTOR_MAX: usize = 5;

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MPoly>) -> Result<Self, PolyError> {
        if entries.len() != rows * cols {
            return Err(PolyError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<MPoly>>) -> Result<Self, PolyError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(PolyError::DimensionMismatch("ragged rows".into()));
        }
        PolyMatrix::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn empty() -> Self {
        PolyMatrix {
            rows: 0,
            cols: 0,
            entries: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[MPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Exact determinant. The empty matrix has determinant `1`.
    pub fn determinant(&self) -> Result<MPoly, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n <= PLAIN_COFACTOR_MAX {
            let cols: Vec<usize> = (0..n).collect();
            Ok(self.cofactor(0, &cols))
        } else {
            Ok(self.memoized_minors())
        }
    }

    /// Laplace expansion along row `row` of the submatrix made of rows
    /// `row..n` and the given columns.
    fn cofactor(&self, row: usize, cols: &[usize]) -> MPoly {
        match cols.len() {
            0 => MPoly::one(),
            1 => self.get(row, cols[0]).clone(),
            _ => {
                let mut acc = MPoly::zero();
                let mut rest = Vec::with_capacity(cols.len() - 1);
                for (pos, &c) in cols.iter().enumerate() {
                    let entry = self.get(row, c);
                    if entry.is_zero() {
                        continue;
                    }
                    rest.clear();
                    rest.extend(cols.iter().copied().filter(|&k| k != c));
                    let minor = self.cofactor(row + 1, &rest);
                    let term = entry * &minor;
                    if pos % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                acc
            }
        }
    }

    /// Division-free determinant: `minors[S]` is the determinant of the
    /// leading `|S|` rows restricted to the column set `S`, built up one
    /// row at a time. Costs `O(2^n · n)` polynomial products.
    fn memoized_minors(&self) -> MPoly {
        let n = self.rows;
        let mut minors: HashMap<u32, MPoly> = HashMap::new();
        minors.insert(0, MPoly::one());
        let mut layer: Vec<u32> = vec![0];
        for row in 0..n {
            let mut next: HashMap<u32, MPoly> = HashMap::new();
            for &set in &layer {
                let Some(minor) = minors.get(&set) else {
                    continue;
                };
                if minor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    if set & (1 << c) != 0 {
                        continue;
                    }
                    let entry = self.get(row, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let grown = set | (1 << c);
                    // Expanding along the last row: column c sits at
                    // position `pos` within `grown`, giving sign (-1)^(row+pos).
                    let pos = (grown & ((1u32 << c) - 1)).count_ones() as usize;
                    let term = entry * minor;
                    let slot = next.entry(grown).or_default();
                    if (row + pos) % 2 == 0 {
                        *slot += &term;
                    } else {
                        *slot -= &term;
                    }
                }
            }
            layer = next.keys().copied().collect();
            layer.sort_unstable();
            minors = next;
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        minors.remove(&full).unwrap_or_default()
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&MPoly) -> MPoly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}
