//! Linear algebra over F₂.
//!
//! Dense matrices are stored bit-packed by rows, 64 entries per word, and all
//! elimination is word-level XOR. The [`sparse`] submodule holds the column
//! reduction used on large tensor complexes.

pub mod sparse;

use crate::error::{invalid, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A fixed-length bit vector over F₂.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in idx {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec({s})")
    }
}

/// Dense F₂ matrix, rows bit-packed.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            data: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries; all rows must share a length.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return invalid("ragged rows");
        }
        Ok(F2Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| BitVec::from_bits(r)).collect(),
        })
    }

    /// Builds a matrix whose columns are the given index lists.
    pub fn from_sparse_columns(rows: usize, columns: &[Vec<usize>]) -> Self {
        let mut m = F2Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for &r in col {
                m.data[r].flip(c);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.data[r].set(c, value)
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r].flip(c)
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].get(c) {
                v.set(r, true);
            }
        }
        v
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.data[r].ones() {
                t.data[c].set(r, true);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return invalid(format!(
                "vector length {} does not match {} columns",
                x.len(),
                self.cols
            ));
        }
        let mut y = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.data[r].dot(x) {
                y.set(r, true);
            }
        }
        Ok(y)
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if self.cols != other.rows {
            return invalid(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = F2Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in self.data[r].ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        Ok(out)
    }

    /// Row echelon form in place; returns the pivot columns in order.
    ///
    /// Pivot choice: leftmost column with a nonzero entry at or below the
    /// current row, taking the lowest such row index.
    pub fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&r| self.data[r].get(c)) else {
                continue;
            };
            self.data.swap(rank, p);
            let (head, tail) = self.data.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            for row in tail.iter_mut() {
                if row.get(c) {
                    row.xor_assign(pivot_row);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        pivots
    }
}

impl std::fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in &self.data {
            let s: String = (0..self.cols)
                .map(|i| if r.get(i) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// Dimension of the row space.
pub fn rank(m: &F2Matrix) -> usize {
    m.clone().echelonize().len()
}

/// Whether `v` lies in the column span of `m`.
pub fn in_image(m: &F2Matrix, v: &BitVec) -> Result<bool> {
    if v.len() != m.rows() {
        return invalid(format!(
            "vector length {} does not match {} rows",
            v.len(),
            m.rows()
        ));
    }
    let mut span = F2Span::new(m.rows());
    for c in 0..m.cols() {
        span.insert(m.column(c));
    }
    Ok(span.contains(v))
}

/// dim ker(boundary_out) − rank(boundary_in), where boundary_in maps into the
/// space on which boundary_out is defined.
pub fn homology_dim(boundary_in: &F2Matrix, boundary_out: &F2Matrix) -> Result<usize> {
    if boundary_out.cols() != boundary_in.rows() {
        return invalid(format!(
            "boundary maps do not compose: out has {} columns, in has {} rows",
            boundary_out.cols(),
            boundary_in.rows()
        ));
    }
    if !boundary_out.mul(boundary_in)?.is_zero() {
        return invalid("boundary_out ∘ boundary_in ≠ 0");
    }
    let n = boundary_out.cols();
    Ok(n - rank(boundary_out) - rank(boundary_in))
}

/// Incrementally built subspace of F₂ⁿ supporting membership tests.
///
/// Each stored vector is keyed by its lowest set bit, so reducing a query
/// vector only ever clears its lowest bit and never loops.
#[derive(Clone, Debug)]
pub struct F2Span {
    dim: usize,
    basis: Vec<Option<BitVec>>,
    rank: usize,
}

impl F2Span {
    pub fn new(dim: usize) -> Self {
        F2Span {
            dim,
            basis: vec![None; dim],
            rank: 0,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn reduce(&self, v: &mut BitVec) -> Option<usize> {
        loop {
            let low = v.first_one()?;
            match &self.basis[low] {
                Some(b) => v.xor_assign(b),
                None => return Some(low),
            }
        }
    }

    /// Adds `v`; returns true if the rank grew.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        match self.reduce(&mut v) {
            Some(low) => {
                self.basis[low] = Some(v);
                self.rank += 1;
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v).is_none()
    }
}
