//! Dense matrices over GF(2) with one `u64` bitmask per row.

use alloc::vec::Vec;

/// Row-bitmask matrix over the two-element field. Bit `j` of a row is column `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: Vec<u64>,
    ncols: usize,
}

impl Gf2Matrix {
    /// Bits at positions `>= ncols` are cleared.
    pub fn from_rows(mut rows: Vec<u64>, ncols: usize) -> Self {
        assert!(ncols <= 64, "at most 64 columns");
        let mask = if ncols == 64 { u64::MAX } else { (1u64 << ncols) - 1 };
        for r in &mut rows {
            *r &= mask;
        }
        Gf2Matrix { rows, ncols }
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Gf2Matrix::from_rows(alloc::vec![0; nrows], ncols)
    }

    pub fn identity(n: usize) -> Self {
        Gf2Matrix::from_rows((0..n).map(|i| 1u64 << i).collect(), n)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let rows = (0..self.ncols)
            .map(|j| {
                self.rows
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &r)| acc | ((r >> j & 1) << i))
            })
            .collect();
        Gf2Matrix::from_rows(rows, self.nrows())
    }

    /// Rank over GF(2) by Gaussian elimination on the row bitmasks.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.ncols {
            let bit = 1u64 << col;
            let Some(pivot) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank];
            for r in rows.iter_mut().skip(rank + 1) {
                if *r & bit != 0 {
                    *r ^= pivot_row;
                }
            }
            rank += 1;
        }
        rank
    }
}
