use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::rational::format_rational;
use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            assert_eq!(row.len(), ncols, "ragged rows");
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Single-column matrix from a coordinate vector.
    pub fn column(v: &[Rational]) -> Self {
        Matrix::from_fn(v.len(), 1, |r, _| v[r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rational> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] * s)
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self[(r, c)].is_zero() {
                        acc += &self[(r, c)] * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Row-vector-matrix product `v * self`.
    pub fn vec_mul(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.rows, v.len(), "dimension mismatch in vec_mul");
        (0..self.cols)
            .map(|c| {
                let mut acc = Rational::zero();
                for (r, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self[(r, c)].is_zero() {
                        acc += x * &self[(r, c)];
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Appends `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square(), "power of non-square matrix");
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True iff `self^rows == 0` (only meaningful for square matrices).
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square(), "nilpotency of non-square matrix");
        let mut p = self.clone();
        for _ in 0..self.rows {
            if p.is_zero() {
                return true;
            }
            p = &p * self;
        }
        p.is_zero()
    }

    /// Reduced row-echelon form together with the pivot column list.
    ///
    /// The row space is preserved; pivot entries are 1 with zeros above and
    /// below; pivot columns are strictly increasing.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].clone().recip();
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in col..m.cols {
                        let v = &m[(r, c)] - &(&f * &m[(row, c)]);
                        m[(r, c)] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// One exact solution of `self * x = b`, free variables set to zero under
    /// rref pivoting; `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch in solve");
        let aug = self.hstack(&Matrix::column(b));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the constant column
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse, or `None` if the matrix is singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Basis rows of the null space, in canonical (rref) form via [`Subspace`].
    pub(crate) fn kernel_rows(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut rows = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = -r[(row, free)].clone();
            }
            rows.push(v);
        }
        rows
    }

    /// Exact determinant by fraction-free (Bareiss) elimination on the
    /// denominator-cleared integer matrix. The 0x0 determinant is 1.
    pub fn det(&self) -> Result<Rational, LinError> {
        if !self.is_square() {
            return Err(LinError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        // Clear denominators row by row, remembering the factor pulled out.
        let mut scale = Rational::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let lcm = self
                .row(r)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale /= Rational::from_integer(lcm.clone());
            m.push(
                self.row(r)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect(),
            );
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        Ok(Rational::from_integer(sign * m[n - 1][n - 1].clone()) * scale)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] + &rhs[(r, c)])
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch");
        Matrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] - &rhs[(r, c)])
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |r, c| -self[(r, c)].clone())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if !a.is_zero() {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        acc += a * b;
                    }
                }
            }
            acc
        })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{rat, rat_int};
    use super::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_zero_matrix() {
        let (r, pivots) = Matrix::zeros(2, 2).rref();
        assert_eq!(r, Matrix::zeros(2, 2));
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_identity() {
        let (r, pivots) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_dependent_rows() {
        // Hand row-reduction: [[2,4],[1,2]] -> R1/2 = [1,2]; R2 - R1 = 0.
        let (r, pivots) = m(vec![vec![2, 4], vec![1, 2]]).rref();
        assert_eq!(r, m(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let b = vec![rat_int(3), rat_int(-5)];
        assert_eq!(Matrix::identity(2).solve(&b), Some(b.clone()));
    }

    #[test]
    fn solve_underdetermined_zeroes_free_vars() {
        let a = m(vec![vec![1, 1]]);
        let x = a.solve(&[rat_int(2)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(0)]);
        assert_eq!(a.mul_vec(&x), vec![rat_int(2)]);
    }

    #[test]
    fn solve_inconsistent_is_none() {
        let a = m(vec![vec![1], vec![1]]);
        assert_eq!(a.solve(&[rat_int(1), rat_int(2)]), None);
    }

    #[test]
    fn kernel_of_row() {
        // [[1,2]] has kernel spanned by (-2,1); rref-normalized to (1,-1/2).
        let rows = m(vec![vec![1, 2]]).kernel_rows();
        assert_eq!(rows.len(), 1);
        let v = &rows[0];
        assert_eq!(
            m(vec![vec![1, 2]]).mul_vec(v),
            vec![Rational::zero()],
            "kernel vector must be annihilated"
        );
    }

    #[test]
    fn det_examples() {
        assert_eq!(Matrix::identity(4).det().unwrap(), rat_int(1));
        assert_eq!(m(vec![vec![0, 1], vec![-1, 0]]).det().unwrap(), rat_int(1));
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).det().unwrap(), rat_int(0));
        assert_eq!(Matrix::zeros(0, 0).det().unwrap(), rat_int(1));
        assert!(Matrix::zeros(2, 3).det().is_err());
    }

    #[test]
    fn det_with_fractions() {
        let a = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ]);
        // 1/10 - 1/12 = 1/60
        assert_eq!(a.det().unwrap(), rat(1, 60));
    }
}
