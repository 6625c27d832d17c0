//! Exact linear algebra over the rationals.
//!
//! Small dense Gaussian elimination, enough for boundary-matrix ranks,
//! homology decompositions, and the LP vertex-enumeration oracle. Pivoting
//! is first-nonzero, so results are deterministic.

use num_traits::Zero;

use crate::rational::Rational;

/// Sparse integer matrix in column-major form; entries are `(row, value)`
/// pairs sorted by row with no zeros. Used for boundary operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    /// Matrix product `self * other` as another sparse matrix.
    pub fn multiply(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let columns = crate::par::map_range(other.cols, |j| {
            let mut acc: std::collections::BTreeMap<usize, i64> = std::collections::BTreeMap::new();
            for &(k, v) in &other.columns[j] {
                for &(i, w) in &self.columns[k] {
                    let e = acc.entry(i).or_insert(0);
                    *e += v * w;
                }
            }
            acc.into_iter().filter(|&(_, v)| v != 0).collect()
        });
        SparseIntMatrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn to_dense(&self) -> QMatrix {
        let mut m = QMatrix::zero(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i, j, Rational::from_integer(v.into()));
            }
        }
        m
    }
}

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Reduces `self` in place to row echelon form and returns the pivot
    /// column indices, one per nonzero row, in order.
    fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, j).is_zero()) else {
                continue;
            };
            self.data.swap_chunks(r, p, self.cols);
            let inv = self.get(r, j).clone();
            for jj in j..self.cols {
                let v = self.get(r, jj) / &inv;
                self.set(r, jj, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, j).is_zero() {
                    let f = self.get(i, j).clone();
                    for jj in j..self.cols {
                        let v = self.get(i, jj) - &f * self.get(r, jj);
                        self.set(i, jj, v);
                    }
                }
            }
            pivots.push(j);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelonize().len()
    }

    /// Indices of a maximal independent set of columns (the pivot columns).
    pub fn column_basis(&self) -> Vec<usize> {
        self.clone().echelonize()
    }

    /// Solves `self * x = rhs` exactly. Returns the particular solution with
    /// all free variables set to zero, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let pivots = aug.echelonize();
        // A pivot in the augmented column means the system is inconsistent.
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &j) in pivots.iter().enumerate() {
            x[j] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<Rational> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (left, right) = self.split_at_mut(hi * width);
        left[lo * width..(lo + 1) * width].swap_with_slice(&mut right[..width]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn m(rows: usize, cols: usize, entries: &[i64]) -> QMatrix {
        let mut q = QMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                q.set(i, j, rat(entries[i * cols + j]));
            }
        }
        q
    }

    #[test]
    fn rank_of_torus_like_matrix_is_one() {
        // Two equal columns: rank 1.
        let q = m(3, 2, &[1, 1, 1, 1, -1, -1]);
        assert_eq!(q.rank(), 1);
        assert_eq!(q.column_basis(), vec![0]);
    }

    #[test]
    fn solve_finds_particular_solution_with_free_vars_zero() {
        let q = m(2, 3, &[1, 2, 0, 0, 0, 1]);
        let x = q.solve(&[rat(5), rat(7)]).unwrap();
        assert_eq!(x, vec![rat(5), rat(0), rat(7)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let q = m(2, 1, &[1, 1]);
        assert!(q.solve(&[rat(1), rat(2)]).is_none());
        assert!(q.solve(&[rat(3), rat(3)]).is_some());
    }

    #[test]
    fn sparse_product_composes() {
        let a = SparseIntMatrix {
            rows: 2,
            cols: 2,
            columns: vec![vec![(0, 1)], vec![(0, 1), (1, -1)]],
        };
        let b = SparseIntMatrix { rows: 2, cols: 1, columns: vec![vec![(0, 2), (1, 3)]] };
        let ab = a.multiply(&b);
        assert_eq!(ab.columns, vec![vec![(0, 5), (1, -3)]]);
    }
}
