//! Exact integer matrices and fraction-free rank computation.

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense matrix over arbitrary-precision integers; rows x cols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        let data = rows
            .into_iter()
            .flatten()
            .map(BigInt::from)
            .collect();
        Self { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        self.data[r * self.cols + c] = value.into();
    }

    pub fn add_at(&mut self, r: usize, c: usize, value: impl Into<BigInt>) {
        self.data[r * self.cols + c] += value.into();
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact rank by Bareiss-style fraction-free Gaussian elimination: all
    /// intermediate entries are integers (divisions by the previous pivot
    /// are exact) and no rounding ever occurs.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0;
        let mut prev_pivot = BigInt::from(1);
        let mut pivot_col = 0;
        while rank < rows && pivot_col < cols {
            let pivot_row = (rank..rows).find(|&r| !m.at(r, pivot_col).is_zero());
            let Some(pr) = pivot_row else {
                pivot_col += 1;
                continue;
            };
            if pr != rank {
                for c in 0..cols {
                    m.data.swap(rank * cols + c, pr * cols + c);
                }
            }
            let pivot = m.at(rank, pivot_col).clone();
            for r in (rank + 1)..rows {
                let factor = m.at(r, pivot_col).clone();
                for c in pivot_col..cols {
                    let val = (&pivot * m.at(r, c) - &factor * m.at(rank, c)) / &prev_pivot;
                    m.data[r * cols + c] = val;
                }
            }
            prev_pivot = pivot;
            rank += 1;
            pivot_col += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(IntMatrix::zero(3, 4).rank(), 0);
        let id = IntMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(id.rank(), 2);
        let singular = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 1, 1]]);
        assert_eq!(singular.rank(), 2);
        let tall = IntMatrix::from_rows(vec![vec![2], vec![3], vec![5]]);
        assert_eq!(tall.rank(), 1);
        // entries that would overflow fixed width during naive elimination
        let wide = IntMatrix::from_rows(vec![
            vec![1_000_000_007, 2, 3, 5],
            vec![7, 1_000_000_007, 11, 13],
            vec![17, 19, 1_000_000_007, 23],
        ]);
        assert_eq!(wide.rank(), 3);
    }

    #[test]
    fn multiplication() {
        let a = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            a.mul(&b),
            IntMatrix::from_rows(vec![vec![2, 1], vec![4, 3]])
        );
        let skew = IntMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]);
        assert!(!skew.mul(&skew).is_zero());
        assert!(a.mul(&IntMatrix::zero(2, 5)).is_zero());
    }
}
