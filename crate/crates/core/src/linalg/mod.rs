//! Dense exact linear algebra over the rationals and over rational functions
//! of one parameter.
//!
//! Everything is deterministic: row reduction scans columns left to right and
//! pivots on the first unused row with a nonzero entry, so every canonical
//! form is reproducible byte for byte.

mod limit;
mod ratfunc;

pub use limit::{generic_row_basis, subspace_limit, LimitError};
pub use ratfunc::{RationalFunction, UniPoly};

use crate::poly::Rational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Field of scalars for matrices: exact rationals or rational functions.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl Field for Rational {}
impl Field for RationalFunction {}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F: Field = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of a row reduction.
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn matmul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, x: &[F]) -> Vec<F> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() {
                        acc = acc + a.clone() * x[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row-echelon form. Pivot rule: scan columns left to right and
    /// pick the first unused row with a nonzero entry in that column.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(r) = found else { continue };
            // swap into place
            if r != pivot_row {
                for j in 0..m.cols {
                    m.data.swap(r * m.cols + j, pivot_row * m.cols + j);
                }
            }
            // normalize pivot to 1
            let inv = F::one() / m.get(pivot_row, col).clone();
            for j in col..m.cols {
                let v = m.get(pivot_row, j).clone() * inv.clone();
                m.set(pivot_row, j, v);
            }
            // clear the column everywhere else
            for r2 in 0..m.rows {
                if r2 == pivot_row || m.get(r2, col).is_zero() {
                    continue;
                }
                let factor = m.get(r2, col).clone();
                for j in col..m.cols {
                    let v = m.get(r2, j).clone() - factor.clone() * m.get(pivot_row, j).clone();
                    m.set(r2, j, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Rref {
            rank: pivots.len(),
            pivots,
            matrix: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Solutions of `M x = 0` as a canonical subspace of the column-index
    /// space.
    pub fn kernel(&self) -> Subspace<F> {
        let r = self.rref();
        let mut basis = Vec::new();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in r.pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![F::zero(); self.cols];
            vec[free] = F::one();
            for (i, &c) in r.pivots.iter().enumerate() {
                vec[c] = F::zero() - r.matrix.get(i, free).clone();
            }
            basis.push(vec);
        }
        Subspace::from_rows(self.cols, basis)
    }

    /// Span of the columns inside the row-index space.
    pub fn column_space(&self) -> Subspace<F> {
        Subspace::from_rows(self.rows, self.transpose().rows_vec())
    }

    /// Span of the rows inside the column-index space.
    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_rows(self.cols, self.rows_vec())
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let r = aug.rref();
        if r.rank < n || r.pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.matrix.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Rank of an integer matrix by fraction-free Bareiss elimination; much
/// cheaper than rational RREF when only the dimension is needed.
pub fn integer_rank(mut m: Vec<Vec<num_bigint::BigInt>>) -> usize {
    use num_bigint::BigInt;
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut pivot_row = 0usize;
    let mut rank = 0usize;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot_row);
        for r2 in pivot_row + 1..rows {
            for c2 in col + 1..cols {
                let num = &m[pivot_row][col] * &m[r2][c2] - &m[r2][col] * &m[pivot_row][c2];
                m[r2][c2] = num / &prev;
            }
            m[r2][col] = BigInt::from(0);
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
        rank += 1;
    }
    rank
}

/// Clears denominators of a rational vector, returning integer entries.
pub fn clear_denominators(row: &[Rational]) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for e in row {
        lcm = lcm.lcm(e.denom());
    }
    row.iter()
        .map(|e| e.numer() * (&lcm / e.denom()))
        .collect()
}

/// A linear subspace given by its canonical reduced-row-echelon basis.
/// Two subspaces are equal iff their RREF bases agree entrywise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F: Field = Rational> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn from_rows(ambient: usize, rows: Vec<Vec<F>>) -> Self {
        for row in &rows {
            assert_eq!(row.len(), ambient, "vector length mismatch");
        }
        if rows.is_empty() {
            return Subspace {
                ambient,
                basis: Vec::new(),
                pivots: Vec::new(),
            };
        }
        let r = Matrix::from_rows(rows).rref();
        let basis = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots: r.pivots,
        }
    }

    pub fn trivial(ambient: usize) -> Self {
        Subspace::from_rows(ambient, Vec::new())
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_rows(ambient, Matrix::<F>::identity(ambient).rows_vec())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; they index the canonical complement
    /// coordinates of the quotient by this subspace.
    pub fn non_pivot_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Residual of `v` after clearing all pivot coordinates with basis rows.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for j in 0..self.ambient {
                out[j] = out[j].clone() - factor.clone() * row[j].clone();
            }
        }
        out
    }

    /// Coordinates of `v + self` on the non-pivot columns.
    pub fn quotient_coords(&self, v: &[F]) -> Vec<F> {
        let red = self.reduce(v);
        self.non_pivot_columns()
            .into_iter()
            .map(|c| red[c].clone())
            .collect()
    }

    pub fn contains_vector(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.basis.iter().all(|b| other.contains_vector(b))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection of two row spaces: solve `Aᵀx + Bᵀy = 0` and read off
    /// the common vectors `Aᵀx`.
    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        assert_eq!(self.ambient, other.ambient);
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Subspace::trivial(self.ambient);
        }
        let mut rows = Vec::with_capacity(self.ambient);
        for j in 0..self.ambient {
            let mut row = Vec::with_capacity(a + b);
            for i in 0..a {
                row.push(self.basis[i][j].clone());
            }
            for i in 0..b {
                row.push(other.basis[i][j].clone());
            }
            rows.push(row);
        }
        let kernel = Matrix::from_rows(rows).kernel();
        let vectors: Vec<Vec<F>> = kernel
            .basis()
            .iter()
            .map(|xy| {
                let mut v = vec![F::zero(); self.ambient];
                for (i, coeff) in xy[..a].iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    for j in 0..self.ambient {
                        v[j] = v[j].clone() + coeff.clone() * self.basis[i][j].clone();
                    }
                }
                v
            })
            .collect();
        Subspace::from_rows(self.ambient, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn qmat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity() {
        let m = qmat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let r = m.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, m);
    }

    #[test]
    fn rref_zero() {
        let m: Matrix<Rational> = Matrix::zeros(2, 3);
        let r = m.rref();
        assert_eq!(r.rank, 0);
        assert_eq!(r.matrix, Matrix::zeros(2, 3));
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = qmat(&[&[0, 0, 0]]);
        assert_eq!(m.kernel().dim(), 3);
        assert_eq!(m.kernel(), Subspace::full(3));
    }

    #[test]
    fn kernel_rank_nullity() {
        let m = qmat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let r = m.rank();
        assert_eq!(r + m.kernel().dim(), 3);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = qmat(&[&[2, 1, 0], &[0, 1, 0], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Matrix::identity(3));
        let singular = qmat(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 0]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn quotient_coords_vanish_on_members() {
        let s = Subspace::from_rows(3, vec![vec![rat(1), rat(2), rat(0)]]);
        assert_eq!(s.quotient_coords(&[rat(2), rat(4), rat(0)]), vec![rat(0); 2]);
        assert_eq!(
            s.quotient_coords(&[rat(0), rat(1), ratio(1, 2)]),
            vec![rat(1), ratio(1, 2)]
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_subspace() -> impl Strategy<Value = Subspace<Rational>> {
            proptest::collection::vec(proptest::collection::vec(-4i64..5, 5), 0..4)
                .prop_map(|rows| {
                    Subspace::from_rows(
                        5,
                        rows.into_iter()
                            .map(|r| r.into_iter().map(rat).collect())
                            .collect(),
                    )
                })
        }

        proptest! {
            #[test]
            fn dimension_formula(a in arb_subspace(), b in arb_subspace()) {
                let inter = a.intersect(&b);
                let sum = a.sum(&b);
                prop_assert_eq!(a.dim() + b.dim(), inter.dim() + sum.dim());
                prop_assert!(inter.is_subspace_of(&a));
                prop_assert!(inter.is_subspace_of(&b));
                prop_assert!(a.is_subspace_of(&sum));
            }

            #[test]
            fn rref_is_idempotent(rows in proptest::collection::vec(proptest::collection::vec(-4i64..5, 4), 1..5)) {
                let m = Matrix::from_rows(
                    rows.into_iter()
                        .map(|r| r.into_iter().map(rat).collect::<Vec<_>>())
                        .collect(),
                );
                let r = m.rref();
                let r2 = r.matrix.rref();
                prop_assert_eq!(r.matrix, r2.matrix);
                prop_assert_eq!(r.rank, r2.rank);
            }
        }
    }
}
