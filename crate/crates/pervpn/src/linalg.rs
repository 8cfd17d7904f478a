//! Exact dense linear algebra over a [`Field`].
//!
//! Matrices are dense and row-major. Everything is computed by fraction-free-ish
//! Gauss–Jordan elimination in exact arithmetic; there is no pivot-size heuristic
//! because there is no rounding. Sizes in this crate stay small (hundreds of
//! rows at the very most), so simplicity wins over sparsity.
//!
//! Conventions used throughout the crate:
//! * vectors are **columns**; a basis of a subspace is a matrix whose columns
//!   are the basis vectors;
//! * a linear map `V -> W` is a `dim W x dim V` matrix acting on column
//!   vectors from the left.

use crate::field::Field;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense `rows x cols` matrix over the field `F`.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<F>, // row-major: entry (r, c) at index r * cols + c
}

impl<F: Field> Mat<F> {
    /// The `rows x cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    /// The `n x n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Build a matrix entry by entry.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    /// Build from a list of rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            assert_eq!(row.len(), ncols, "ragged rows in Mat::from_rows");
        }
        Mat {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from integer rows (test convenience).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| F::from_int(v)).collect())
                .collect(),
        )
    }

    /// A single column vector.
    pub fn col_vec(entries: Vec<F>) -> Self {
        let rows = entries.len();
        Mat {
            rows,
            cols: 1,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &F {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Is this a square matrix?
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &F) -> Self {
        self.map(|v| v.clone() * s.clone())
    }

    /// The `r`-th row as a new 1 x cols matrix.
    pub fn row(&self, r: usize) -> Self {
        Mat::from_fn(1, self.cols, |_, c| self.at(r, c).clone())
    }

    /// The `c`-th column as a new column vector.
    pub fn col(&self, c: usize) -> Self {
        Mat::from_fn(self.rows, 1, |r, _| self.at(r, c).clone())
    }

    /// Copy of the sub-block at the given row/column index sets.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Mat::from_fn(rows.len(), cols.len(), |r, c| {
            self.at(rows[r], cols[c]).clone()
        })
    }

    /// Horizontal concatenation `[A | B | ...]`. All blocks share a row count.
    pub fn hstack(blocks: &[&Mat<F>]) -> Self {
        assert!(!blocks.is_empty(), "hstack of zero blocks");
        let rows = blocks[0].rows;
        let cols = blocks.iter().map(|b| b.cols).sum();
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
        }
        let mut m = Mat::zero(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for r in 0..rows {
                for c in 0..b.cols {
                    m.set(r, offset + c, b.at(r, c).clone());
                }
            }
            offset += b.cols;
        }
        m
    }

    /// Vertical concatenation. All blocks share a column count.
    pub fn vstack(blocks: &[&Mat<F>]) -> Self {
        assert!(!blocks.is_empty(), "vstack of zero blocks");
        let cols = blocks[0].cols;
        let rows = blocks.iter().map(|b| b.rows).sum();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
        }
        let mut m = Mat::zero(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..cols {
                    m.set(offset + r, c, b.at(r, c).clone());
                }
            }
            offset += b.rows;
        }
        m
    }

    /// Block matrix from a grid of blocks. Row `i` of the grid must have a
    /// consistent row count, column `j` a consistent column count.
    pub fn block(grid: &[Vec<&Mat<F>>]) -> Self {
        let rows: Vec<Mat<F>> = grid.iter().map(|row| Mat::hstack(row)).collect();
        Mat::vstack(&rows.iter().collect::<Vec<_>>())
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &Mat<F>) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "matmul dimension mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out: Mat<F> = Mat::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(r, c).clone();
                    out.set(r, c, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// The result satisfies: pivot entries are 1, pivot columns are standard
    /// basis vectors, and pivots move strictly right as rows descend.
    pub fn rref_with_pivots(&self) -> (Mat<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Find a nonzero pivot in this column at or below `row`.
            let Some(prow) = (row..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            if prow != row {
                for c in 0..m.cols {
                    let idx_a = prow * m.cols + c;
                    let idx_b = row * m.cols + c;
                    m.entries.swap(idx_a, idx_b);
                }
            }
            // Normalize the pivot row.
            let inv = m.at(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.at(row, c).clone();
                m.set(row, c, v * inv.clone());
            }
            // Eliminate the column everywhere else.
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = m.at(r, c).clone() - factor.clone() * m.at(row, c).clone();
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Mat<F> {
        self.rref_with_pivots().0
    }

    /// Rank of the matrix.
    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// A basis of the kernel (null space), as the columns of the returned
    /// matrix; `cols x nullity`. `A * kernel_basis(A) == 0`.
    pub fn kernel_basis(&self) -> Mat<F> {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, F::one());
            for (prow, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -r.at(prow, fc).clone());
            }
        }
        basis
    }

    /// A basis of the column space: the columns of `self` at the pivot
    /// positions of the rref; `rows x rank`.
    pub fn image_basis(&self) -> Mat<F> {
        let (_, pivots) = self.rref_with_pivots();
        Mat::from_fn(self.rows, pivots.len(), |r, k| {
            self.at(r, pivots[k]).clone()
        })
    }

    /// Solve `self * x = rhs` for one solution of each right-hand-side column.
    ///
    /// Returns `None` if any column of `rhs` is outside the column space.
    /// Free variables are set to zero, so the result is deterministic.
    pub fn solve(&self, rhs: &Mat<F>) -> Option<Mat<F>> {
        assert_eq!(self.rows, rhs.rows, "solve dimension mismatch");
        let aug = Mat::hstack(&[self, rhs]);
        let (r, pivots) = aug.rref_with_pivots();
        // Any pivot in the rhs block certifies inconsistency.
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(self.cols, rhs.cols);
        for (prow, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, r.at(prow, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Mat<F>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let id = Mat::identity(n);
        let aug = Mat::hstack(&[self, &id]);
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    /// Is this square matrix invertible?
    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Given the columns of `sub` spanning a subspace U of the space spanned
    /// by the columns of `ambient`, return the indices of the `ambient`
    /// columns that complete a basis of U to a basis of U + ambient.
    ///
    /// Used for quotient-space bases: the returned `ambient` columns project
    /// to a basis of (U + ambient)/U.
    pub fn complement_pivots(sub: &Mat<F>, ambient: &Mat<F>) -> Vec<usize> {
        assert_eq!(sub.rows, ambient.rows, "complement_pivots row mismatch");
        let stacked = Mat::hstack(&[sub, ambient]);
        let (_, pivots) = stacked.rref_with_pivots();
        pivots
            .into_iter()
            .filter(|&p| p >= sub.cols)
            .map(|p| p - sub.cols)
            .collect()
    }

    /// Coordinates of each column of `vecs` in the basis given by the columns
    /// of `basis`. Panics if any vector is not in the span (callers use this
    /// only where membership is guaranteed).
    pub fn coordinates_in_basis(basis: &Mat<F>, vecs: &Mat<F>) -> Mat<F> {
        basis
            .solve(vecs)
            .expect("vector outside the span of the claimed basis")
    }
}

impl<F: Field> Add for &Mat<F> {
    type Output = Mat<F>;
    fn add(self, rhs: Self) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add mismatch");
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() + rhs.at(r, c).clone()
        })
    }
}

impl<F: Field> Sub for &Mat<F> {
    type Output = Mat<F>;
    fn sub(self, rhs: Self) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub mismatch");
        Mat::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() - rhs.at(r, c).clone()
        })
    }
}

impl<F: Field> Neg for &Mat<F> {
    type Output = Mat<F>;
    fn neg(self) -> Mat<F> {
        self.map(|v| -v.clone())
    }
}

impl<F: Field> Mul for &Mat<F> {
    type Output = Mat<F>;
    fn mul(self, rhs: Self) -> Mat<F> {
        self.matmul(rhs)
    }
}

impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    fn qm(rows: &[&[i64]]) -> Mat<Q> {
        Mat::from_int_rows(rows)
    }

    #[test]
    fn rref_hand_checked() {
        // A hand-reduced 3x4 system with a rational pivot cascade.
        let a = qm(&[&[2, 4, 1, 8], &[1, 2, 0, 3], &[0, 0, 1, 2]]);
        let (r, pivots) = a.rref_with_pivots();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r, qm(&[&[1, 2, 0, 3], &[0, 0, 1, 2], &[0, 0, 0, 0]]));
    }

    #[test]
    fn rref_rational_pivots() {
        // Entries force genuine fractions: [[2,1],[1,1]]^-1 = [[1,-1],[-1,2]].
        let a = qm(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, qm(&[&[1, -1], &[-1, 2]]));
        assert_eq!(a.matmul(&inv), Mat::identity(2));
    }

    #[test]
    fn kernel_and_image() {
        let a = qm(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(a.matmul(&k).is_zero());
        let im = a.image_basis();
        assert_eq!(im.cols(), 1);
        assert_eq!(im, qm(&[&[1], &[2]]));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = qm(&[&[1, 1], &[0, 0]]);
        let good = qm(&[&[5], &[0]]);
        let bad = qm(&[&[5], &[1]]);
        let x = a.solve(&good).unwrap();
        assert_eq!(a.matmul(&x), good);
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn complement_pivots_quotient_basis() {
        // U = span{(1,0,0)}, ambient = span{(1,1,0),(0,1,0),(0,0,1)}.
        // The quotient (U + ambient)/U is 2-dimensional; the first ambient
        // column is already a valid complement vector.
        let sub = qm(&[&[1], &[0], &[0]]);
        let amb = qm(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]);
        let picks = Mat::complement_pivots(&sub, &amb);
        assert_eq!(picks, vec![0, 2]);
    }

    #[test]
    fn block_stacking() {
        let a = qm(&[&[1]]);
        let b = qm(&[&[2]]);
        let m = Mat::block(&[vec![&a, &b], vec![&b, &a]]);
        assert_eq!(m, qm(&[&[1, 2], &[2, 1]]));
    }

    #[test]
    fn prime_field_rref() {
        type F5 = Fp<5>;
        let a: Mat<F5> = Mat::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Mat::identity(2));
        // Same matrix, but its char-5 inverse reduces mod 5.
        assert_eq!(inv, Mat::from_int_rows(&[&[1, -1], &[-1, 2]]));
    }

    #[test]
    fn coordinates_round_trip() {
        let basis = qm(&[&[1, 1], &[0, 1], &[0, 0]]);
        let vecs = qm(&[&[3], &[2], &[0]]);
        let coords = Mat::coordinates_in_basis(&basis, &vecs);
        assert_eq!(basis.matmul(&coords), vecs);
        assert_eq!(coords, qm(&[&[1], &[2]]));
    }
}
