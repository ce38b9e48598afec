//! Lie algebras presented by structure constants.
//!
//! An algebra of dimension `n` is stored as the dense rank-3 tensor
//! `c[i][j][k]` = coefficient of `e_k` in `[e_i, e_j]`. Construction
//! validates antisymmetry and the Jacobi identity on all basis triples, so a
//! `LieAlgebra` value is a certificate that both hold.

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{Matrix, Rational, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("conflicting structure constants for bracket [e{i}, e{j}]")]
    AntisymmetryConflict { i: usize, j: usize },
    #[error("Jacobi identity fails on basis triple (e{i}, e{j}, e{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
}

/// A finite-dimensional Lie algebra over the rationals, given by structure
/// constants on a fixed basis `e0..e(n-1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// c[i][j] is the coordinate vector of [e_i, e_j].
    c: Vec<Vec<Vec<Rational>>>,
    names: Option<Vec<String>>,
}

/// Sparse bracket description: `(i, j, [(k, coeff), ...])` declares
/// `[e_i, e_j] = sum coeff * e_k`. Unspecified brackets default to zero and
/// `[e_j, e_i]` is filled in by antisymmetry.
pub type BracketSpec = (usize, usize, Vec<(usize, Rational)>);

impl LieAlgebra {
    /// Builds and validates an algebra from a sparse bracket list.
    ///
    /// Duplicate `(i, j)` entries (or an `(j, i)` entry inconsistent with
    /// antisymmetry) are rejected; the Jacobi identity is checked on every
    /// basis triple and a violating triple is reported as a witness.
    pub fn new(dim: usize, brackets: &[BracketSpec]) -> Result<Self, LieError> {
        let zero_vec = vec![Rational::zero(); dim];
        let mut c = vec![vec![zero_vec.clone(); dim]; dim];
        let mut set = vec![vec![false; dim]; dim];
        for (i, j, out) in brackets {
            let (i, j) = (*i, *j);
            for &idx in [i, j].iter().chain(out.iter().map(|(k, _)| k)) {
                if idx >= dim {
                    return Err(LieError::IndexOutOfRange { index: idx, dim });
                }
            }
            let mut v = zero_vec.clone();
            for (k, coeff) in out {
                v[*k] = &v[*k] + coeff;
            }
            if i == j {
                // [e_i, e_i] = 0 is forced; any nonzero declaration conflicts.
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(LieError::AntisymmetryConflict { i, j });
                }
                continue;
            }
            let neg: Vec<Rational> = v.iter().map(|x| -x.clone()).collect();
            if (set[i][j] && c[i][j] != v) || (set[j][i] && c[j][i] != neg) {
                return Err(LieError::AntisymmetryConflict { i, j });
            }
            c[i][j] = v;
            c[j][i] = neg;
            set[i][j] = true;
            set[j][i] = true;
        }
        let algebra = LieAlgebra { dim, c, names: None };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    /// As [`LieAlgebra::new`], wiring in basis labels for display.
    pub fn with_names(
        dim: usize,
        brackets: &[BracketSpec],
        names: Vec<String>,
    ) -> Result<Self, LieError> {
        assert_eq!(names.len(), dim, "one name per basis element");
        let mut algebra = Self::new(dim, brackets)?;
        algebra.names = Some(names);
        Ok(algebra)
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: vec![vec![vec![Rational::zero(); dim]; dim]; dim],
            names: None,
        }
    }

    /// Constructs directly from a full tensor, validating antisymmetry and
    /// Jacobi. Used by quotient constructions.
    pub fn from_tensor(dim: usize, c: Vec<Vec<Vec<Rational>>>) -> Result<Self, LieError> {
        assert_eq!(c.len(), dim);
        for row in &c {
            assert_eq!(row.len(), dim);
            for v in row {
                assert_eq!(v.len(), dim);
            }
        }
        for i in 0..dim {
            for j in i..dim {
                let neg: Vec<Rational> = c[j][i].iter().map(|x| -x.clone()).collect();
                if c[i][j] != neg {
                    return Err(LieError::AntisymmetryConflict { i, j });
                }
            }
        }
        let algebra = LieAlgebra { dim, c, names: None };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    fn check_jacobi(&self) -> Result<(), LieError> {
        // Antisymmetry makes the Jacobi expression alternating, so triples
        // with repeated entries vanish automatically: i < j < k suffices.
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let mut acc = self.bracket(&self.c[i][j], &basis_vec(self.dim, k));
                    add_into(&mut acc, &self.bracket(&self.c[j][k], &basis_vec(self.dim, i)));
                    add_into(&mut acc, &self.bracket(&self.c[k][i], &basis_vec(self.dim, j)));
                    if acc.iter().any(|x| !x.is_zero()) {
                        return Err(LieError::JacobiViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn basis_name(&self, i: usize) -> String {
        match &self.names {
            Some(names) => names[i].clone(),
            None => format!("e{i}"),
        }
    }

    /// Structure constant c[i][j][k].
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    /// Coordinate vector of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.c[i][j]
    }

    /// Bilinear extension of the structure tensor: `[u, v]`.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim, "left argument of wrong length");
        assert_eq!(v.len(), self.dim, "right argument of wrong length");
        let mut acc = vec![Rational::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let coeff = a * b;
                for (k, s) in self.c[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        acc[k] = &acc[k] + &(&coeff * s);
                    }
                }
            }
        }
        acc
    }

    /// Matrix of `ad(x): v -> [x, v]` (columns are `[x, e_j]`).
    pub fn ad_matrix(&self, x: &[Rational]) -> Matrix {
        assert_eq!(x.len(), self.dim, "argument of wrong length");
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, s) in self.c[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        m[(k, j)] = &m[(k, j)] + &(a * s);
                    }
                }
            }
        }
        m
    }

    /// Matrix of the coadjoint operator `ad*(x) = -transpose(ad(x))`, acting
    /// on covectors stored as column coordinate vectors:
    /// `(ad*(x) b)(v) = -b([x, v])`.
    pub fn coad_matrix(&self, x: &[Rational]) -> Matrix {
        -&self.ad_matrix(x).transpose()
    }

    /// Center: the joint kernel of all `ad(e_i)`.
    pub fn center(&self) -> Subspace {
        let mut stacked = Matrix::zeros(0, self.dim);
        for i in 0..self.dim {
            stacked = stacked.vstack(&self.ad_matrix(&basis_vec(self.dim, i)));
        }
        Subspace::kernel(&stacked)
    }

    /// Derived ideal: the span of all brackets `[e_i, e_j]`.
    pub fn derived_ideal(&self) -> Subspace {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                rows.push(self.c[i][j].clone());
            }
        }
        Subspace::from_spanning(self.dim, rows)
    }

    /// Lower central series `C^1 = g`, `C^(k+1) = [g, C^k]`, listed until it
    /// stabilizes; the final entry is repeated only if the series never
    /// reaches zero (non-nilpotent case).
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().unwrap();
            if last.is_zero() {
                break;
            }
            let mut rows = Vec::new();
            for i in 0..self.dim {
                for r in 0..last.dim() {
                    rows.push(self.bracket(&basis_vec(self.dim, i), last.basis().row(r)));
                }
            }
            let next = Subspace::from_spanning(self.dim, rows);
            if &next == last {
                break; // stabilized above zero: not nilpotent
            }
            series.push(next);
        }
        series
    }

    /// Nilpotency flag and, when nilpotent, the nilindex: the first `k` with
    /// `C^k = 0` (so the abelian algebra has nilindex 2).
    pub fn is_nilpotent(&self) -> (bool, Option<usize>) {
        let series = self.lower_central_series();
        if series.last().unwrap().is_zero() {
            (true, Some(series.len()))
        } else {
            (false, None)
        }
    }

    /// Unimodularity: `trace(ad x) = 0` for every basis `x`. For a symplectic
    /// Lie algebra this is the geodesic-completeness flag of the canonical
    /// flat connection.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| self.ad_matrix(&basis_vec(self.dim, i)).trace().is_zero())
    }

    /// `[S, S] subset of S`.
    pub fn subalgebra_check(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim, "ambient dimension mismatch");
        (0..s.dim()).all(|a| {
            (a + 1..s.dim()).all(|b| s.contains(&self.bracket(s.basis().row(a), s.basis().row(b))))
        })
    }

    /// `[g, S] subset of S`.
    pub fn ideal_check(&self, s: &Subspace) -> bool {
        assert_eq!(s.ambient_dim(), self.dim, "ambient dimension mismatch");
        (0..self.dim).all(|i| {
            (0..s.dim()).all(|b| s.contains(&self.bracket(&basis_vec(self.dim, i), s.basis().row(b))))
        })
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra(dim {})", self.dim)
    }
}

/// Standard basis vector `e_i` of length `n`.
pub fn basis_vec(n: usize, i: usize) -> Vec<Rational> {
    use num_traits::One;
    assert!(i < n, "basis index out of range");
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn add_into(acc: &mut [Rational], v: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = &*a + b;
        }
    }
}
