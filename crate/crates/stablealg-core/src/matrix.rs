//! Dense exact matrices: reduced row echelon form, rank, kernels, solving,
//! and integer-lattice rank.
//!
//! Row-major storage, column-vector convention throughout the crate: a
//! morphism matrix `M` sends `x` to `M x`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::field::{Field, Rationals};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F: Field> {
    pub field: F,
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

/// Outcome of a row reduction: rank, kernel basis and, when a right-hand
/// side was supplied and the system is consistent, one particular solution
/// per rhs column.
pub struct RrefSolve<F: Field> {
    pub rank: usize,
    /// Columns span the null space.
    pub kernel: Matrix<F>,
    /// `None` when no rhs was given or the system is inconsistent.
    pub solution: Option<Matrix<F>>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            data.extend(row);
        }
        Matrix { field, rows: r, cols: c, data }
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// A single column vector.
    pub fn column(field: F, v: Vec<F::Elem>) -> Self {
        let rows = v.len();
        Matrix { field, rows, cols: 1, data: v }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col_vec(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("matrix add".to_string()));
        }
        Ok(Self::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.add(self.at(i, j), other.at(i, j))
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("matrix sub".to_string()));
        }
        Ok(Self::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.sub(self.at(i, j), other.at(i, j))
        }))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.mul(self.at(i, j), c)
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch("matrix mul".to_string()));
        }
        let f = self.field.clone();
        let mut out = Self::zero(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let v = f.add(out.at(i, j), &f.mul(a, b));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        debug_assert_eq!(self.cols, v.len());
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for (j, vj) in v.iter().enumerate() {
                if !f.is_zero(vj) && !f.is_zero(self.at(i, j)) {
                    out[i] = f.add(&out[i], &f.mul(self.at(i, j), vj));
                }
            }
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("hstack".to_string()));
        }
        Ok(Self::from_fn(self.field.clone(), self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        }))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch("vstack".to_string()));
        }
        Ok(Self::from_fn(self.field.clone(), self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        }))
    }

    pub fn block_diag(field: F, blocks: &[&Matrix<F>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zero(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.at(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Keep the listed columns, in order.
    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field.clone(), self.rows, idx.len(), |i, j| self.at(i, idx[j]).clone())
    }

    /// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            // Pick the first nonzero entry at or below `row`.
            let Some(p) = (row..self.rows).find(|&r| !f.is_zero(self.at(r, col))) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    let a = self.at(row, j).clone();
                    let b = self.at(p, j).clone();
                    self.set(row, j, b);
                    self.set(p, j, a);
                }
            }
            let inv = f.inv(self.at(row, col)).expect("pivot nonzero");
            for j in col..self.cols {
                let v = f.mul(self.at(row, j), &inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !f.is_zero(self.at(r, col)) {
                    let factor = self.at(r, col).clone();
                    for j in col..self.cols {
                        let v = f.sub(self.at(r, j), &f.mul(&factor, self.at(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Exact rank, kernel basis, and optional solve against `rhs`.
    ///
    /// The kernel matrix has one basis vector per column; `solution` is a
    /// matrix of the same column count as `rhs` when the system `self * x =
    /// rhs` is consistent, and `None` when it is not.
    pub fn rref_rank_solve(&self, rhs: Option<&Matrix<F>>) -> Result<RrefSolve<F>> {
        let f = self.field.clone();
        if let Some(b) = rhs {
            if b.field != self.field {
                return Err(Error::FieldMismatch);
            }
            if b.rows != self.rows {
                return Err(Error::ShapeMismatch("rhs rows".to_string()));
            }
        }
        let aug_cols = self.cols + rhs.map_or(0, |b| b.cols);
        let mut work = Matrix::from_fn(f.clone(), self.rows, aug_cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                rhs.unwrap().at(i, j - self.cols).clone()
            }
        });
        // Reduce only by pivots inside the coefficient block.
        let pivots = {
            let mut pivots = Vec::new();
            let mut row = 0;
            for col in 0..self.cols {
                if row >= work.rows {
                    break;
                }
                let Some(p) = (row..work.rows).find(|&r| !f.is_zero(work.at(r, col))) else {
                    continue;
                };
                if p != row {
                    for j in 0..aug_cols {
                        let a = work.at(row, j).clone();
                        let b = work.at(p, j).clone();
                        work.set(row, j, b);
                        work.set(p, j, a);
                    }
                }
                let inv = f.inv(work.at(row, col)).expect("pivot nonzero");
                for j in 0..aug_cols {
                    let v = f.mul(work.at(row, j), &inv);
                    work.set(row, j, v);
                }
                for r in 0..work.rows {
                    if r != row && !f.is_zero(work.at(r, col)) {
                        let factor = work.at(r, col).clone();
                        for j in 0..aug_cols {
                            let v = f.sub(work.at(r, j), &f.mul(&factor, work.at(row, j)));
                            work.set(r, j, v);
                        }
                    }
                }
                pivots.push(col);
                row += 1;
            }
            pivots
        };
        let rank = pivots.len();

        // Kernel basis from the free columns.
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut kernel = Matrix::zero(f.clone(), self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            kernel.set(fc, k, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                kernel.set(pc, k, f.neg(work.at(r, fc)));
            }
        }

        // Particular solution: consistent iff no pivot appears in the rhs block.
        let solution = rhs.map(|b| {
            for r in rank..work.rows {
                for j in 0..b.cols {
                    if !f.is_zero(work.at(r, self.cols + j)) {
                        return None;
                    }
                }
            }
            let mut sol = Matrix::zero(f.clone(), self.cols, b.cols);
            for (r, &pc) in pivots.iter().enumerate() {
                for j in 0..b.cols {
                    sol.set(pc, j, work.at(r, self.cols + j).clone());
                }
            }
            Some(sol)
        });

        Ok(RrefSolve {
            rank,
            kernel,
            solution: solution.flatten(),
        })
    }

    pub fn kernel(&self) -> Matrix<F> {
        self.rref_rank_solve(None).expect("no rhs").kernel
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        if self.rows != self.cols {
            return Err(Error::NonSquare);
        }
        let id = Matrix::identity(self.field.clone(), self.rows);
        let out = self.rref_rank_solve(Some(&id))?;
        if out.rank < self.rows {
            return Err(Error::ShapeMismatch("matrix not invertible".to_string()));
        }
        Ok(out.solution.expect("consistent"))
    }

    /// A basis (as columns) for the column span, together with the indices of
    /// the chosen spanning columns.  Pivot columns of the RREF are a basis.
    pub fn column_space_basis(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (self.select_cols(&pivots), pivots)
    }

    /// Does `v` lie in the column span of `self`?
    pub fn spans(&self, v: &[F::Elem]) -> bool {
        let rhs = Matrix::column(self.field.clone(), v.to_vec());
        self.rref_rank_solve(Some(&rhs))
            .map(|s| s.solution.is_some())
            .unwrap_or(false)
    }
}

/// Integer matrices with arbitrary-precision entries; home of the
/// Grothendieck-group lattice computations.
#[derive(Clone, PartialEq, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_columns(rows: usize, cols: Vec<Vec<BigInt>>) -> Self {
        let c = cols.len();
        let mut data = vec![BigInt::from(0); rows * c];
        for (j, col) in cols.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for i in 0..rows {
                data[i * c + j] = col[i].clone();
            }
        }
        IntMatrix { rows, cols: c, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    /// Rank of the subgroup of Z^rows generated by the columns.
    ///
    /// Free abelian subgroups of Z^n have rank equal to the rational rank of
    /// any generating matrix, so this reads the matrix over Q.
    pub fn subgroup_rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let q = Rationals;
        let m = Matrix::from_fn(q, self.rows, self.cols, |i, j| {
            BigRational::from_integer(self.at(i, j).clone())
        });
        m.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qm(rows: Vec<Vec<i64>>) -> Matrix<Rationals> {
        let q = Rationals;
        Matrix::from_rows(
            q,
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| q.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_has_full_rank_empty_kernel() {
        let m = Matrix::identity(Rationals, 2);
        let out = m.rref_rank_solve(None).unwrap();
        assert_eq!(out.rank, 2);
        assert_eq!(out.kernel.cols, 0);
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let m: Matrix<Rationals> = Matrix::zero(Rationals, 3, 3);
        let out = m.rref_rank_solve(None).unwrap();
        assert_eq!(out.rank, 0);
        assert_eq!(out.kernel.cols, 3);
    }

    // Oracle: by-hand Gaussian elimination of [[1,2],[2,4]]: R2 -= 2 R1 gives
    // [[1,2],[0,0]], so rank 1 and kernel spanned by (2,-1) (up to scale).
    #[test]
    fn rank_one_kernel_matches_hand_elimination() {
        let m = qm(vec![vec![1, 2], vec![2, 4]]);
        let out = m.rref_rank_solve(None).unwrap();
        assert_eq!(out.rank, 1);
        assert_eq!(out.kernel.cols, 1);
        let k = out.kernel.col_vec(0);
        // Proportional to (2, -1): 1*k0 + 2*k1 = 0.
        let q = Rationals;
        let lhs = q.add(&k[0], &q.mul(&q.from_i64(2), &k[1]));
        assert!(q.is_zero(&lhs));
        assert!(!q.is_zero(&k[0]));
    }

    #[test]
    fn solve_reproduces_rhs_exactly() {
        let m = qm(vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let rhs = qm(vec![vec![3], vec![5]]);
        let out = m.rref_rank_solve(Some(&rhs)).unwrap();
        let sol = out.solution.unwrap();
        assert_eq!(m.mul(&sol).unwrap(), rhs);
    }

    #[test]
    fn inconsistent_system_reports_absence() {
        let m = qm(vec![vec![1, 2], vec![2, 4]]);
        let rhs = qm(vec![vec![0], vec![1]]);
        let out = m.rref_rank_solve(Some(&rhs)).unwrap();
        assert!(out.solution.is_none());
    }

    #[test]
    fn rank_plus_nullity_is_cols() {
        let mats = [
            qm(vec![vec![1, 2], vec![2, 4]]),
            qm(vec![vec![0, 0], vec![0, 0]]),
            qm(vec![vec![1, 0, 2], vec![0, 1, 3]]),
        ];
        for m in mats {
            let out = m.rref_rank_solve(None).unwrap();
            assert_eq!(out.rank + out.kernel.cols, m.cols);
        }
    }

    #[test]
    fn prime_field_inverse_roundtrip() {
        let f = PrimeField::new(101).unwrap();
        let m = Matrix::from_rows(
            f,
            alloc::vec![alloc::vec![3u64, 1], alloc::vec![5, 2]],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 2));
    }

    // Oracle: Hermite form of [(2,4),(1,2)] by hand: columns (2,4) and (1,2)
    // are proportional, so the subgroup has rank 1.
    #[test]
    fn integer_subgroup_ranks() {
        let full = IntMatrix::from_columns(
            2,
            alloc::vec![
                alloc::vec![BigInt::from(1), BigInt::from(0)],
                alloc::vec![BigInt::from(0), BigInt::from(1)],
            ],
        );
        assert_eq!(full.subgroup_rank(), 2);
        let rank1 = IntMatrix::from_columns(
            2,
            alloc::vec![
                alloc::vec![BigInt::from(2), BigInt::from(4)],
                alloc::vec![BigInt::from(1), BigInt::from(2)],
            ],
        );
        assert_eq!(rank1.subgroup_rank(), 1);
        let empty = IntMatrix::from_columns(3, alloc::vec![]);
        assert_eq!(empty.subgroup_rank(), 0);
    }
}
