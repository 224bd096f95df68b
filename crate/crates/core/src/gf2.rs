//! Dense linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words and a matrix is a list of packed
//! rows. Elimination always picks the lowest-index pivot row for the
//! lowest-index column so that certificates are reproducible. None of the
//! solvers touch their inputs.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over Z₂. Bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
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

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from 0/1 entries; any nonzero entry counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    /// Indicator vector of `ones`. Panics if an index is out of range.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, ones: I) -> Self {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.toggle(i);
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
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// `self += other`. Panics on length mismatch.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Inner product over Z₂.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec[{self}]")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A dense `rows × cols` matrix over Z₂ stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from packed rows, all of length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(BitMatrix { cols, rows })
    }

    /// Builds a matrix from a nested 0/1 table. An empty table is 0 × 0.
    pub fn from_table<R: AsRef<[u8]>>(table: &[R]) -> Result<Self> {
        let cols = table.first().map_or(0, |r| r.as_ref().len());
        let rows = table.iter().map(|r| BitVec::from_bits(r.as_ref())).collect();
        BitMatrix::from_rows(cols, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &BitVec> {
        self.rows.iter()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `self · x` for a column vector `x` of length `cols`.
    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = BitVec::zeros(self.rows());
        for (i, row) in self.rows.iter().enumerate() {
            if row.dot(x) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Sum of the rows selected by `coeffs` (a row vector times the matrix).
    pub fn combine_rows(&self, coeffs: &BitVec) -> Result<BitVec> {
        if coeffs.len() != self.rows() {
            return Err(Error::DimensionMismatch {
                expected: self.rows(),
                found: coeffs.len(),
            });
        }
        let mut out = BitVec::zeros(self.cols);
        for i in coeffs.ones() {
            out.xor_assign(&self.rows[i]);
        }
        Ok(out)
    }

    pub fn row_sum(&self) -> BitVec {
        let mut out = BitVec::zeros(self.cols);
        for row in &self.rows {
            out.xor_assign(row);
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows(), self.cols)?;
        for row in &self.rows {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a set of vectors.
///
/// Every pivot column holds a single 1 across the stored rows, so the
/// coordinates of a vector in the span can be read off at the pivots.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new<'a, I>(cols: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a BitVec>,
    {
        let rows: Vec<BitVec> = vectors.into_iter().cloned().collect();
        let (rows, pivots) = eliminate(rows, cols);
        RowEchelon { cols, rows, pivots }
    }

    pub fn of_matrix(m: &BitMatrix) -> Self {
        RowEchelon::new(m.cols(), m.row_iter())
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.rows
    }

    /// Reduces `v` against the basis: the result is zero at every pivot and
    /// differs from `v` by an element of the span.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` with respect to the stored basis, assuming `v`
    /// lies in the span.
    pub fn coordinates(&self, v: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.rank());
        for (i, &p) in self.pivots.iter().enumerate() {
            if v.get(p) {
                out.set(i, true);
            }
        }
        out
    }
}

/// Full Gauss-Jordan elimination over the first `cols` columns. Returns the
/// nonzero reduced rows and their pivot columns, in pivot order.
fn eliminate(mut rows: Vec<BitVec>, cols: usize) -> (Vec<BitVec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        let Some(found) = (next..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    (rows, pivots)
}

pub fn rank(m: &BitMatrix) -> usize {
    RowEchelon::of_matrix(m).rank()
}

/// Finds some `x` with `a · x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve(a: &BitMatrix, b: &BitVec) -> Result<Option<BitVec>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let augmented: Vec<BitVec> = a
        .row_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut ext = BitVec::zeros(n + 1);
            for c in row.ones() {
                ext.set(c, true);
            }
            ext.set(n, b.get(i));
            ext
        })
        .collect();
    // A pivot in the augmented column means a row reads 0 = 1.
    let (rows, pivots) = eliminate(augmented, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = BitVec::zeros(n);
    for (row, &p) in rows.iter().zip(&pivots) {
        if row.get(n) {
            x.set(p, true);
        }
    }
    debug_assert_eq!(a.mul_vec(&x).ok().as_ref(), Some(b));
    Ok(Some(x))
}

/// A basis of `{x : a · x = 0}` of size `cols − rank(a)`, one vector per
/// free column.
pub fn nullspace_basis(a: &BitMatrix) -> Vec<BitVec> {
    let n = a.cols();
    let echelon = RowEchelon::of_matrix(a);
    let mut is_pivot = vec![false; n];
    for &p in echelon.pivots() {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = BitVec::zeros(n);
            x.set(f, true);
            for (row, &p) in echelon.basis().iter().zip(echelon.pivots()) {
                if row.get(f) {
                    x.set(p, true);
                }
            }
            x
        })
        .collect()
}

/// Coefficients `y` over the rows of `m` with `yᵀ · m = v`, if any.
pub fn in_rowspace(m: &BitMatrix, v: &BitVec) -> Result<Option<BitVec>> {
    if v.len() != m.cols() {
        return Err(Error::DimensionMismatch {
            expected: m.cols(),
            found: v.len(),
        });
    }
    solve(&m.transpose(), v)
}
