//! Dense matrices over GF(2) with word-packed rows.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD: usize = u64::BITS as usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum Gf2Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square")]
    NotSquare,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD);
        BitMatrix {
            rows,
            cols,
            stride,
            bits: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Build from rows of 0/1 entries. Panics on ragged input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b != 0);
            }
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.bits[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        let w = &mut self.bits[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.bits[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rank over GF(2) by forward elimination on a scratch copy of the rows.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if self.stride == 1 {
            let mut rows = self.bits.clone();
            return rank_single_word(&mut rows, self.cols);
        }
        let mut rows = self.bits.clone();
        let s = self.stride;
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, mask) = (col / WORD, 1u64 << (col % WORD));
            let Some(p) = (rank..self.rows).find(|&r| rows[r * s + w] & mask != 0) else {
                continue;
            };
            if p != rank {
                for k in 0..s {
                    rows.swap(p * s + k, rank * s + k);
                }
            }
            for r in rank + 1..self.rows {
                if rows[r * s + w] & mask != 0 {
                    for k in w..s {
                        let v = rows[rank * s + k];
                        rows[r * s + k] ^= v;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// `n_cols - rank`; the 0×0 matrix has nullity 0.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Principal submatrix on the given index list, in that order.
    pub fn principal_submatrix(&self, keep: &[usize]) -> BitMatrix {
        let mut m = BitMatrix::zeros(keep.len(), keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.get(i, j) {
                    m.set(a, b, true);
                }
            }
        }
        m
    }

    /// Append `border` as a last row and column with `corner` in the new diagonal slot.
    pub fn bordered(&self, border: &[bool], corner: bool) -> Result<BitMatrix, Gf2Error> {
        if !self.is_square() {
            return Err(Gf2Error::NotSquare);
        }
        if border.len() != self.rows {
            return Err(Gf2Error::DimensionMismatch {
                expected: self.rows,
                found: border.len(),
            });
        }
        let n = self.rows;
        let mut m = BitMatrix::zeros(n + 1, n + 1);
        for (i, &b) in border.iter().enumerate() {
            for j in 0..n {
                if self.get(i, j) {
                    m.set(i, j, true);
                }
            }
            if b {
                m.set(i, n, true);
                m.set(n, i, true);
            }
        }
        m.set(n, n, corner);
        Ok(m)
    }

    /// Apply the same permutation to rows and columns: entry (i,j) moves to (perm[i], perm[j]).
    pub fn permuted(&self, perm: &[usize]) -> BitMatrix {
        assert!(self.is_square() && perm.len() == self.rows);
        let mut m = BitMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    m.set(perm[i], perm[j], true);
                }
            }
        }
        m
    }
}

fn rank_single_word(rows: &mut [u64], cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let mask = 1u64 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & mask != 0) else {
            continue;
        };
        rows.swap(p, rank);
        let pivot = rows[rank];
        for r in rows.iter_mut().skip(rank + 1) {
            if *r & mask != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            f.write_str("  ")?;
            for j in 0..self.cols {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullity_examples() {
        assert_eq!(BitMatrix::zeros(2, 2).nullity(), 2);
        assert_eq!(BitMatrix::identity(3).nullity(), 0);
        assert_eq!(BitMatrix::from_rows(&[[1u8, 1], [1, 1]]).nullity(), 1);
        assert_eq!(BitMatrix::zeros(0, 0).nullity(), 0);
    }

    #[test]
    fn wide_rows_use_multiword_path() {
        let n = 130;
        let mut m = BitMatrix::identity(n);
        assert_eq!(m.nullity(), 0);
        m.set(n - 1, 70, true);
        assert_eq!(m.nullity(), 0);
        // Last row becomes e_0 + e_70, the sum of rows 0 and 70.
        m.set(n - 1, n - 1, false);
        m.set(n - 1, 0, true);
        assert_eq!(m.nullity(), 1);
        assert_eq!(m.rank() + m.nullity(), n);
    }

    #[test]
    fn bordered_examples() {
        let m = BitMatrix::from_rows(&[[0u8]]);
        assert_eq!(
            m.bordered(&[true], false).unwrap(),
            BitMatrix::from_rows(&[[0u8, 1], [1, 0]])
        );
        assert_eq!(
            BitMatrix::zeros(0, 0).bordered(&[], true).unwrap(),
            BitMatrix::from_rows(&[[1u8]])
        );
        let k2 = BitMatrix::from_rows(&[[0u8, 1], [1, 0]]);
        assert_eq!(
            k2.bordered(&[true, false], true).unwrap(),
            BitMatrix::from_rows(&[[0u8, 1, 1], [1, 0, 0], [1, 0, 1]])
        );
        assert_eq!(
            k2.bordered(&[true], true),
            Err(Gf2Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            BitMatrix::zeros(1, 2).bordered(&[true], true),
            Err(Gf2Error::NotSquare)
        );
    }

    #[test]
    fn submatrix_and_symmetry() {
        let m = BitMatrix::from_rows(&[[1u8, 1, 0], [1, 0, 1], [0, 1, 1]]);
        assert!(m.is_symmetric());
        assert_eq!(
            m.principal_submatrix(&[0, 2]),
            BitMatrix::from_rows(&[[1u8, 0], [0, 1]])
        );
        assert_eq!(m.principal_submatrix(&[]).n_rows(), 0);
    }
}
