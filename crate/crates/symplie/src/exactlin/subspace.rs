use std::fmt;

use num_traits::{One, Zero};

use super::{Matrix, Rational};

/// A linear subspace of Q^n in canonical form.
///
/// The stored basis is the reduced row-echelon form of any generating set,
/// with strictly increasing pivot columns and no zero rows. Two equal
/// subspaces therefore have identical stored bases, and `==` on `Subspace`
/// is subspace equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonicalizes a spanning set (rows) into a subspace.
    pub fn from_spanning(ambient_dim: usize, rows: Vec<Vec<Rational>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient_dim, "spanning vector of wrong length");
        }
        let (rref, pivots) = Matrix::from_rows(rows).rref();
        let basis = Matrix::from_fn(pivots.len(), ambient_dim, |r, c| rref[(r, c)].clone());
        Subspace {
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the standard basis vectors at the given coordinate indices.
    pub fn coordinate_span(ambient_dim: usize, indices: &[usize]) -> Self {
        let rows = indices
            .iter()
            .map(|&i| {
                assert!(i < ambient_dim, "coordinate index out of range");
                let mut v = vec![Rational::zero(); ambient_dim];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace::from_spanning(ambient_dim, rows)
    }

    /// Null space of `a`, acting on column vectors of length `a.cols()`.
    pub fn kernel(a: &Matrix) -> Self {
        Subspace::from_spanning(a.cols(), a.kernel_rows())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Rational> {
        self.basis.row_vec(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership test by reduction against the rref basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Rational::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Remainder of `v` after subtracting its projection onto the basis
    /// (pivot-coordinate elimination). Zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim, "vector of wrong length");
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for c in 0..self.ambient_dim {
                    let delta = &f * &self.basis[(row, c)];
                    if !delta.is_zero() {
                        w[c] = &w[c] - &delta;
                    }
                }
            }
        }
        w
    }

    /// Coordinates of `v` in the canonical basis; `None` if `v` is outside.
    ///
    /// Because the basis is in rref, the coefficient of basis row `r` is just
    /// the pivot-column entry `v[pivots[r]]`.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Sum of subspaces (span of the union of bases).
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for i in 0..self.dim() {
            rows.push(self.basis.row_vec(i));
        }
        for i in 0..other.dim() {
            rows.push(other.basis.row_vec(i));
        }
        Subspace::from_spanning(self.ambient_dim, rows)
    }

    /// Intersection, computed from the stacked annihilator constraints.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient mismatch");
        let constraints = self
            .annihilator_matrix()
            .vstack(&other.annihilator_matrix());
        Subspace::kernel(&constraints)
    }

    /// A matrix whose kernel is exactly this subspace (rows span the
    /// annihilator under the dot pairing).
    pub fn annihilator_matrix(&self) -> Matrix {
        Matrix::from_rows(self.basis.kernel_rows())
    }

    /// Deterministic complement: the coordinate axes at non-pivot indices.
    pub fn complement(&self) -> Subspace {
        let free: Vec<usize> = (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        Subspace::coordinate_span(self.ambient_dim, &free)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}) {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}
