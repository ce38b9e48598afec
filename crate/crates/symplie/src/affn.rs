//! The affine Lie algebra aff(R^n) as a Frobenius symplectic Lie algebra.
//!
//! aff(R^n) = R^n x gl(R^n) with bracket
//! `[(x,u), (y,v)] = (u(y) - v(x), [u,v])`, ordered basis: the n translation
//! generators `e0..e(n-1)` first, then the matrix units `E_ij` row-major.
//!
//! A linear functional is encoded by a pair [`AffFunctional`] `(g, M)` via
//! `alpha(x, u) = g(x) + tr(M u)`, and the exact coboundary
//! `delta alpha = -alpha([.,.])` turns aff(R^n) into a symplectic Lie
//! algebra whenever the coadjoint orbit of `(g, M)` is open. This module
//! computes: openness and the orientation invariant separating the two open
//! orbits, the explicit coadjoint action, the momentum on translations, the
//! cyclic vector and reduced pair of one symplectic reduction, the
//! orthogonal/commutant splitting, and the pair of transversal Lagrangian
//! subalgebras L (strict upper triangular in the cyclic basis, translations
//! included) and L' (lower triangular, last row zero), tiled by the abelian
//! pieces K_i and C(N_i).

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{Matrix, Rational, Subspace};
use crate::liealg::LieAlgebra;
use crate::symplectic::{coboundary, SubspaceClass, SymplecticError, SymplecticStructure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffError {
    #[error("linear part T is singular")]
    SingularT,
    #[error("the coadjoint orbit of (g, M) is not open")]
    OrbitNotOpen,
    #[error("M is not nilpotent")]
    NotNilpotent,
    #[error("no cyclic vector: {{g, tMg, ..., tM^(n-1)g}} is not a basis")]
    NoCyclicVector,
    #[error("internal invariant violated: {context}")]
    Internal { context: String },
}

/// Dimension of aff(R^n).
pub fn aff_dim(n: usize) -> usize {
    n * (n + 1)
}

/// Index of the matrix unit E_ij in the aff(R^n) basis.
pub fn unit_index(n: usize, i: usize, j: usize) -> usize {
    assert!(i < n && j < n, "matrix unit index out of range");
    n + i * n + j
}

/// aff(R^n): translations first, matrix units row-major; brackets
/// `[E_ij, e_b] = delta_jb e_i` and `[E_ij, E_kl] = delta_jk E_il - delta_li E_kj`.
pub fn build_aff(n: usize) -> LieAlgebra {
    assert!(n >= 1, "aff(R^n) needs n >= 1");
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // [E_ij, e_j] = e_i
            brackets.push((unit_index(n, i, j), j, vec![(i, Rational::one())]));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let p = unit_index(n, i, j);
            for k in 0..n {
                for l in 0..n {
                    let q = unit_index(n, k, l);
                    if p >= q {
                        continue;
                    }
                    let mut out: Vec<(usize, Rational)> = Vec::new();
                    if j == k {
                        out.push((unit_index(n, i, l), Rational::one()));
                    }
                    if l == i {
                        out.push((unit_index(n, k, j), -Rational::one()));
                    }
                    if !out.is_empty() {
                        brackets.push((p, q, out));
                    }
                }
            }
        }
    }
    let mut names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("E{i}_{j}"));
        }
    }
    LieAlgebra::with_names(aff_dim(n), &brackets, names)
        .expect("aff(R^n) brackets satisfy Jacobi")
}

/// Coordinates of an element `(t, u)` in the aff(R^n) basis.
pub fn embed(n: usize, t: &[Rational], u: &Matrix) -> Vec<Rational> {
    assert_eq!(t.len(), n);
    assert!(u.rows() == n && u.cols() == n);
    let mut v = Vec::with_capacity(aff_dim(n));
    v.extend_from_slice(t);
    for i in 0..n {
        for j in 0..n {
            v.push(u[(i, j)].clone());
        }
    }
    v
}

/// The translation component of an aff(R^n) coordinate vector.
pub fn translation_part(n: usize, v: &[Rational]) -> Vec<Rational> {
    v[..n].to_vec()
}

/// The gl(R^n) component of an aff(R^n) coordinate vector.
pub fn linear_part(n: usize, v: &[Rational]) -> Matrix {
    Matrix::from_fn(n, n, |i, j| v[unit_index(n, i, j)].clone())
}

/// An element of aff(R^n)* presented as the unique pair `(g, M)` with
/// `alpha(x, u) = g(x) + tr(M u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffFunctional {
    n: usize,
    g: Vec<Rational>,
    m: Matrix,
}

impl AffFunctional {
    pub fn new(n: usize, g: Vec<Rational>, m: Matrix) -> Self {
        assert_eq!(g.len(), n, "g must have length n");
        assert!(m.rows() == n && m.cols() == n, "M must be n x n");
        AffFunctional { n, g, m }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g(&self) -> &[Rational] {
        &self.g
    }

    pub fn m(&self) -> &Matrix {
        &self.m
    }

    /// Coordinates in the dual of the [`build_aff`] basis. Since
    /// `tr(M E_ij) = M[j][i]`, the E_ij slot carries `M[j][i]`.
    pub fn covector(&self) -> Vec<Rational> {
        let n = self.n;
        let mut v = Vec::with_capacity(aff_dim(n));
        v.extend_from_slice(&self.g);
        for i in 0..n {
            for j in 0..n {
                v.push(self.m[(j, i)].clone());
            }
        }
        v
    }

    /// The 2-coboundary `delta alpha` as a matrix on aff(R^n).
    pub fn delta(&self) -> Matrix {
        coboundary(&build_aff(self.n), &self.covector())
    }
}

/// The regular datum: `g` the last dual basis vector, `M` the single
/// lower-shift Jordan block (`M e_i = e_(i+1)`). Its coadjoint orbit is open.
pub fn regular_functional(n: usize) -> AffFunctional {
    let mut g = vec![Rational::zero(); n];
    g[n - 1] = Rational::one();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n - 1 {
        m[(i + 1, i)] = Rational::one();
    }
    AffFunctional::new(n, g, m)
}

/// A group element `(x, T)` of the affine group, with `T` invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffGroupElement {
    x: Vec<Rational>,
    t: Matrix,
    t_inv: Matrix,
}

impl AffGroupElement {
    pub fn new(x: Vec<Rational>, t: Matrix) -> Result<Self, AffError> {
        let n = x.len();
        assert!(t.rows() == n && t.cols() == n, "T must be n x n");
        let t_inv = t.inverse().ok_or(AffError::SingularT)?;
        Ok(AffGroupElement { x, t, t_inv })
    }

    pub fn identity(n: usize) -> Self {
        AffGroupElement {
            x: vec![Rational::zero(); n],
            t: Matrix::identity(n),
            t_inv: Matrix::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn t(&self) -> &Matrix {
        &self.t
    }

    /// Group product `(x1, T1)(x2, T2) = (x1 + T1 x2, T1 T2)`.
    pub fn compose(&self, other: &AffGroupElement) -> AffGroupElement {
        assert_eq!(self.n(), other.n(), "dimension mismatch");
        let mut x = self.t.mul_vec(&other.x);
        for (a, b) in x.iter_mut().zip(&self.x) {
            *a = &*a + b;
        }
        let t = &self.t * &other.t;
        let t_inv = &other.t_inv * &self.t_inv;
        AffGroupElement { x, t, t_inv }
    }
}

/// The coadjoint action on `(h, N)` pairs, computed by factoring
/// `(x, T) = (x, I) (0, T)` and composing the two generator formulas:
/// `(0, T): (h, N) -> (tT^(-1) h, T N T^(-1))` followed by
/// `(x, I): (h, N) -> (h, N + (h x x))` with `(h x x)(y) = h(y) x`.
pub fn coadjoint_apply(el: &AffGroupElement, beta: &AffFunctional) -> AffFunctional {
    let n = beta.n;
    assert_eq!(el.n(), n, "dimension mismatch");
    // (0, T) part
    let h = el.t_inv.transpose().mul_vec(&beta.g);
    let mut m = &(&el.t * &beta.m) * &el.t_inv;
    // (x, I) part: add the rank-one matrix y -> h(y) x
    for r in 0..n {
        if el.x[r].is_zero() {
            continue;
        }
        for c in 0..n {
            if !h[c].is_zero() {
                m[(r, c)] = &m[(r, c)] + &(&el.x[r] * &h[c]);
            }
        }
    }
    AffFunctional::new(n, h, m)
}

/// Momentum of the translation subgroup at `(x, T)`: the covector
/// `tT^(-1) g`. Matches the `g` component of [`coadjoint_apply`] for any `M`.
pub fn momentum_translations(g: &[Rational], el: &AffGroupElement) -> Vec<Rational> {
    assert_eq!(g.len(), el.n(), "dimension mismatch");
    el.t_inv.transpose().mul_vec(g)
}

/// The matrix with rows `tM^(n-1) g, tM^(n-2) g, ..., g` (as covector rows).
fn iterate_matrix(alpha: &AffFunctional) -> Matrix {
    let n = alpha.n;
    let mut rows = vec![alpha.g.clone()]; // g M^0
    for k in 1..n {
        rows.push(alpha.m.vec_mul(&rows[k - 1]));
    }
    Matrix::from_fn(n, n, |r, c| rows[n - 1 - r][c].clone())
}

/// Openness of the coadjoint orbit of `(g, M)`: nondegeneracy of the
/// coboundary `delta alpha` on aff(R^n).
pub fn orbit_is_open(alpha: &AffFunctional) -> bool {
    !alpha.delta().det().expect("delta is square").is_zero()
}

/// Orientation invariant of an open orbit: the sign of
/// `det(tM^(n-1) g; ...; tM g; g)` in the standard dual basis. The two open
/// orbits are exactly the two values.
pub fn orientation(alpha: &AffFunctional) -> Result<i8, AffError> {
    if !orbit_is_open(alpha) {
        return Err(AffError::OrbitNotOpen);
    }
    let det = iterate_matrix(alpha).det().expect("square");
    if det.is_zero() {
        // Contradicts openness; kept as a hard error rather than a guess.
        return Err(AffError::Internal {
            context: "open orbit but singular iterate matrix".into(),
        });
    }
    Ok(if det > Rational::zero() { 1 } else { -1 })
}

/// The vector `x` with `g(M^i x) = 0` for `i <= n-2` and `g(M^(n-1) x) = 1`;
/// exists and is unique exactly when the orbit is open.
pub fn cyclic_vector(alpha: &AffFunctional) -> Result<Vec<Rational>, AffError> {
    let n = alpha.n;
    let mut rows = vec![alpha.g.clone()];
    for k in 1..n {
        rows.push(alpha.m.vec_mul(&rows[k - 1]));
    }
    let system = Matrix::from_rows(rows);
    if system.det().expect("square").is_zero() {
        return Err(AffError::NoCyclicVector);
    }
    let mut rhs = vec![Rational::zero(); n];
    rhs[n - 1] = Rational::one();
    Ok(system.solve(&rhs).expect("nonsingular system"))
}

/// The symplectic structure `(aff(R^n), delta alpha)`; requires an open
/// orbit (nondegeneracy).
pub fn aff_symplectic(alpha: &AffFunctional) -> Result<SymplecticStructure, AffError> {
    match SymplecticStructure::new(build_aff(alpha.n), alpha.delta()) {
        Ok(s) => Ok(s),
        Err(SymplecticError::Degenerate { .. }) => Err(AffError::OrbitNotOpen),
        Err(e) => Err(AffError::Internal {
            context: format!("delta alpha failed validation: {e}"),
        }),
    }
}

/// Result of one symplectic reduction of `(g, M)` with `M` nilpotent.
#[derive(Debug, Clone)]
pub struct ReducedPair {
    /// `g1 = tM g`, as a covector on R^n.
    pub g1: Vec<Rational>,
    /// The reduced operator on Ker(g) in its canonical (echelon) basis.
    pub m1: Matrix,
    /// The same data repackaged as a functional on R^(n-1): `g1` restricted
    /// to Ker(g) in the same basis. `None` at the terminal stage n = 1.
    pub next: Option<AffFunctional>,
}

/// One reduction step of the pair `(g, M)`: `g1 = tM g` and the unique
/// `(n-1) x (n-1)` matrix `M1` on Ker(g) with
/// `tr(M u) = g1(u(M^(n-1) x)) + tr(M1 u')` for every `u`, where `u'` is the
/// compression of `u` to Ker(g) along the `M^(n-1) x` direction. The
/// identity is verified on all n^2 matrix units.
pub fn reduced_pair(alpha: &AffFunctional) -> Result<ReducedPair, AffError> {
    let n = alpha.n;
    if !alpha.m.is_nilpotent() {
        return Err(AffError::NotNilpotent);
    }
    if !orbit_is_open(alpha) {
        return Err(AffError::OrbitNotOpen);
    }
    let x = cyclic_vector(alpha)?;
    let w = alpha.m.pow(n - 1).mul_vec(&x); // M^(n-1) x, complement of Ker(g)
    let g1 = alpha.m.vec_mul(&alpha.g); // tM g as a row covector

    let ker = Subspace::kernel(&Matrix::from_rows(vec![alpha.g.clone()]));
    assert_eq!(ker.dim(), n - 1, "g must be nonzero on an open orbit");

    // Full-basis matrix F with columns w_0..w_(n-2), w; coordinates in this
    // basis are F^(-1) v, and the first n-1 coordinates compress to Ker(g).
    let f = Matrix::from_fn(n, n, |r, c| {
        if c < n - 1 {
            ker.basis()[(c, r)].clone()
        } else {
            w[r].clone()
        }
    });
    let f_inv = f.inverse().ok_or(AffError::Internal {
        context: "kernel basis plus M^(n-1)x failed to span".into(),
    })?;

    let compress = |u: &Matrix| -> Matrix {
        Matrix::from_fn(n - 1, n - 1, |r, c| {
            let coords = f_inv.mul_vec(&u.mul_vec(ker.basis().row(c)));
            coords[r].clone()
        })
    };
    let m1 = compress(&alpha.m);

    // Trace identity on every matrix unit E_ij.
    for i in 0..n {
        for j in 0..n {
            let mut unit = Matrix::zeros(n, n);
            unit[(i, j)] = Rational::one();
            let lhs = alpha.m[(j, i)].clone(); // tr(M E_ij)
            let g1_term = &g1[i] * &w[j]; // g1(E_ij w) = w_j g1_i
            let rhs = g1_term + (&m1 * &compress(&unit)).trace();
            if lhs != rhs {
                return Err(AffError::Internal {
                    context: format!("trace identity fails on matrix unit E{i}_{j}"),
                });
            }
        }
    }
    if !m1.is_nilpotent() {
        return Err(AffError::Internal {
            context: "reduced operator M1 is not nilpotent".into(),
        });
    }

    let next = if n > 1 {
        // g1 restricted to Ker(g), in the same canonical basis as M1.
        let g_next: Vec<Rational> = (0..n - 1)
            .map(|c| {
                let mut acc = Rational::zero();
                for (t, gv) in g1.iter().enumerate() {
                    if !gv.is_zero() {
                        acc += gv * &ker.basis()[(c, t)];
                    }
                }
                acc
            })
            .collect();
        Some(AffFunctional::new(n - 1, g_next, m1.clone()))
    } else {
        None
    };
    Ok(ReducedPair { g1, m1, next })
}

/// The three subspaces of the orthogonal splitting at an open-orbit datum.
#[derive(Debug, Clone)]
pub struct OrthogonalSplitting {
    /// The translation ideal I.
    pub translations: Subspace,
    /// Its delta-alpha orthogonal, of dimension n^2.
    pub orthogonal: Subspace,
    /// The commutant of M in gl(R^n), embedded with zero translation part.
    pub commutant: Subspace,
}

/// Splits aff(R^n) = I_perp (+) C(M) and verifies that the translation
/// ideal is a 2-sided ideal of I_perp for the induced left-symmetric
/// product.
pub fn orthogonal_splitting(alpha: &AffFunctional) -> Result<OrthogonalSplitting, AffError> {
    let n = alpha.n;
    let dim = aff_dim(n);
    let s = aff_symplectic(alpha)?;
    let translations = Subspace::coordinate_span(dim, &(0..n).collect::<Vec<_>>());
    let orthogonal = s.orthogonal(&translations);

    // Commutant: kernel of u -> uM - Mu over the n^2 unit coordinates.
    let mut rows = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut row = vec![Rational::zero(); n * n];
            for r in 0..n {
                for c in 0..n {
                    let mut coeff = Rational::zero();
                    if r == a {
                        coeff += &alpha.m[(c, b)];
                    }
                    if c == b {
                        coeff -= &alpha.m[(a, r)];
                    }
                    row[r * n + c] = coeff;
                }
            }
            rows.push(row);
        }
    }
    let gl_kernel = Subspace::kernel(&Matrix::from_rows(rows));
    let commutant_rows: Vec<Vec<Rational>> = (0..gl_kernel.dim())
        .map(|r| {
            let u = gl_kernel.basis().row(r);
            let mut v = vec![Rational::zero(); dim];
            v[n..].clone_from_slice(u);
            v
        })
        .collect();
    let commutant = Subspace::from_spanning(dim, commutant_rows);

    if orthogonal.dim() + commutant.dim() != dim
        || !orthogonal.intersect(&commutant).is_zero()
    {
        return Err(AffError::Internal {
            context: "I_perp and C(M) do not split aff(R^n)".into(),
        });
    }
    if !orthogonal.contains_subspace(&translations) {
        return Err(AffError::Internal {
            context: "translations are not isotropic for delta alpha".into(),
        });
    }
    let lsa = s.lsa_product().map_err(|e| AffError::Internal {
        context: format!("product table failed: {e}"),
    })?;
    for a in 0..translations.dim() {
        for b in 0..orthogonal.dim() {
            let t = translations.basis().row(a);
            let y = orthogonal.basis().row(b);
            if !translations.contains(&lsa.product(t, y))
                || !translations.contains(&lsa.product(y, t))
            {
                return Err(AffError::Internal {
                    context: "translations are not a 2-sided product ideal of I_perp".into(),
                });
            }
        }
    }
    Ok(OrthogonalSplitting {
        translations,
        orthogonal,
        commutant,
    })
}

/// Verification outcomes of [`lagrangian_pair`]. Aggregate claims that fail
/// are recorded in `findings` rather than suppressed.
#[derive(Debug, Clone, Default)]
pub struct DecompositionChecks {
    pub l_is_subalgebra: bool,
    pub lprime_is_subalgebra: bool,
    pub l_lagrangian: bool,
    pub lprime_lagrangian: bool,
    pub intersection_trivial: bool,
    pub dims_match: bool,
    pub pieces_abelian: bool,
    pub pieces_isotropic: bool,
    pub k_sum_equals_l: bool,
    pub c_sum_equals_lprime: bool,
    pub reduced_pairs_consistent: bool,
    pub findings: Vec<String>,
}

impl DecompositionChecks {
    pub fn all_pass(&self) -> bool {
        self.l_is_subalgebra
            && self.lprime_is_subalgebra
            && self.l_lagrangian
            && self.lprime_lagrangian
            && self.intersection_trivial
            && self.dims_match
            && self.pieces_abelian
            && self.pieces_isotropic
            && self.k_sum_equals_l
            && self.c_sum_equals_lprime
            && self.reduced_pairs_consistent
    }
}

/// The full decomposition of aff(R^n) for a nilpotent open-orbit datum.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub n: usize,
    /// Cyclic vector x with g(M^i x) = 0 (i < n-1), g(M^(n-1) x) = 1.
    pub cyclic_x: Vec<Rational>,
    /// Change-of-basis matrix with columns x, Mx, ..., M^(n-1)x.
    pub basis_b: Matrix,
    /// Strict upper triangular profile in the cyclic (n+1)-matrix picture;
    /// contains all translations.
    pub l_sub: Subspace,
    /// Lower triangular (diagonal included) profile with zero translations.
    pub lprime_sub: Subspace,
    /// K_n, ..., K_1: the isotropic ideals of the reduction chain. K_i is
    /// column i of the (n+1)-matrix picture, rows above the diagonal, the
    /// translation column being column n.
    pub k_list: Vec<Subspace>,
    /// C(N), C(N_(n-1)), ..., C(N_1): commutant pieces, host dims n..1.
    pub c_list: Vec<Subspace>,
    /// The reduction chain of functionals, stage n down to stage 1.
    pub reduced_pairs: Vec<AffFunctional>,
    pub checks: DecompositionChecks,
}

/// Builds the transversal Lagrangian pair L, L' of `(g, N)` (N nilpotent,
/// open orbit), together with the abelian isotropic pieces that tile them,
/// and verifies every structural claim exactly.
pub fn lagrangian_pair(alpha: &AffFunctional) -> Result<DecompositionReport, AffError> {
    let n = alpha.n;
    let dim = aff_dim(n);
    if !alpha.m.is_nilpotent() {
        return Err(AffError::NotNilpotent);
    }
    if !orbit_is_open(alpha) {
        return Err(AffError::OrbitNotOpen);
    }
    let x = cyclic_vector(alpha)?;

    // B columns: x, Nx, ..., N^(n-1)x. Its inverse is free: row r of B^(-1)
    // is g N^(n-1-r), because g(N^k x) = delta_(k,n-1) and N^n = 0.
    let mut cols = vec![x.clone()];
    for c in 1..n {
        let prev = &cols[c - 1];
        cols.push(alpha.m.mul_vec(prev));
    }
    let basis_b = Matrix::from_fn(n, n, |r, c| cols[c][r].clone());
    let mut grows = vec![alpha.g.clone()];
    for k in 1..n {
        grows.push(alpha.m.vec_mul(&grows[k - 1]));
    }
    let b_inv = Matrix::from_fn(n, n, |r, c| grows[n - 1 - r][c].clone());
    if &(&basis_b * &b_inv) != &Matrix::identity(n) {
        return Err(AffError::Internal {
            context: "cyclic basis inverse identity failed".into(),
        });
    }

    // E_rc in the cyclic basis, pushed to standard coordinates.
    let unit_std = |r: usize, c: usize| -> Matrix {
        let mut e = Matrix::zeros(n, n);
        e[(r, c)] = Rational::one();
        &(&basis_b * &e) * &b_inv
    };

    let zero_t = vec![Rational::zero(); n];

    // L: strict upper triangle of the (n+1)x(n+1) picture. Linear entries
    // (i, j), i < j <= n-1, plus the whole translation column.
    let mut l_rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            l_rows.push(embed(n, &zero_t, &unit_std(i, j)));
        }
    }
    for col in &cols {
        l_rows.push(embed(n, col, &Matrix::zeros(n, n)));
    }
    let l_sub = Subspace::from_spanning(dim, l_rows);

    // L': lower triangle including the diagonal, zero translations.
    let mut lp_rows = Vec::new();
    for i in 0..n {
        for j in 0..=i {
            lp_rows.push(embed(n, &zero_t, &unit_std(i, j)));
        }
    }
    let lprime_sub = Subspace::from_spanning(dim, lp_rows);

    // K_i = column i of the picture, rows 0..i-1 (column n = translations).
    let mut k_list = Vec::new();
    for i in (1..=n).rev() {
        let rows: Vec<Vec<Rational>> = if i == n {
            cols.iter()
                .map(|t| embed(n, t, &Matrix::zeros(n, n)))
                .collect()
        } else {
            (0..i)
                .map(|r| embed(n, &zero_t, &unit_std(r, i)))
                .collect()
        };
        k_list.push(Subspace::from_spanning(dim, rows));
    }

    // C(N_i): the unital commutant of the truncated shift N_i (host dim i),
    // spanned by the embedded projection N_i^0 and the powers N_i^k.
    // N_i^k has cyclic-basis entries (j + k, j) for j <= i-1-k.
    let mut c_list = Vec::new();
    for i in (1..=n).rev() {
        let mut rows = Vec::new();
        for k in 0..i {
            let mut e = Matrix::zeros(n, n);
            if k == 0 {
                for j in 0..i {
                    e[(j, j)] = Rational::one();
                }
            } else {
                for j in 0..i - k {
                    e[(j + k, j)] = Rational::one();
                }
            }
            rows.push(embed(n, &zero_t, &(&(&basis_b * &e) * &b_inv)));
        }
        c_list.push(Subspace::from_spanning(dim, rows));
    }

    // Verification sweep.
    let s = aff_symplectic(alpha)?;
    let algebra = s.algebra();
    let mut checks = DecompositionChecks::default();
    let mut findings = Vec::new();

    checks.l_is_subalgebra = algebra.subalgebra_check(&l_sub);
    checks.lprime_is_subalgebra = algebra.subalgebra_check(&lprime_sub);
    checks.l_lagrangian = s.classify(&l_sub) == SubspaceClass::Lagrangian;
    checks.lprime_lagrangian = s.classify(&lprime_sub) == SubspaceClass::Lagrangian;
    checks.intersection_trivial = l_sub.intersect(&lprime_sub).is_zero();
    checks.dims_match = l_sub.dim() == dim / 2 && lprime_sub.dim() == dim / 2;

    checks.pieces_abelian = true;
    checks.pieces_isotropic = true;
    for (label, piece) in k_list
        .iter()
        .enumerate()
        .map(|(idx, p)| (format!("K{}", n - idx), p))
        .chain(
            c_list
                .iter()
                .enumerate()
                .map(|(idx, p)| (format!("C{}", n - idx), p)),
        )
    {
        let abelian = (0..piece.dim()).all(|a| {
            (a + 1..piece.dim()).all(|b| {
                algebra
                    .bracket(piece.basis().row(a), piece.basis().row(b))
                    .iter()
                    .all(Rational::is_zero)
            })
        });
        let isotropic = s.classify(piece).is_isotropic();
        if !abelian {
            checks.pieces_abelian = false;
            findings.push(format!("{label} is not abelian"));
        }
        if !isotropic {
            checks.pieces_isotropic = false;
            findings.push(format!("{label} is not isotropic"));
        }
    }

    let k_sum = k_list
        .iter()
        .fold(Subspace::zero(dim), |acc, p| acc.sum(p));
    checks.k_sum_equals_l = k_sum == l_sub;
    if !checks.k_sum_equals_l {
        findings.push("direct sum of the K pieces differs from L".into());
    }
    let c_sum = c_list
        .iter()
        .fold(Subspace::zero(dim), |acc, p| acc.sum(p));
    checks.c_sum_equals_lprime = c_sum == lprime_sub;
    if !checks.c_sum_equals_lprime {
        findings.push("direct sum of the C pieces differs from L'".into());
    }

    // Reduction chain of functionals, cross-checking the profile view.
    let mut reduced_pairs = vec![alpha.clone()];
    checks.reduced_pairs_consistent = true;
    let mut stage = alpha.clone();
    while stage.n > 1 {
        match reduced_pair(&stage) {
            Ok(rp) => {
                let next = rp.next.expect("n > 1 has a next stage");
                if !next.m.is_nilpotent() || !orbit_is_open(&next) {
                    checks.reduced_pairs_consistent = false;
                    findings.push(format!(
                        "stage {} reduced pair lost regularity",
                        next.n
                    ));
                    break;
                }
                reduced_pairs.push(next.clone());
                stage = next;
            }
            Err(e) => {
                checks.reduced_pairs_consistent = false;
                findings.push(format!("reduction failed at stage {}: {e}", stage.n));
                break;
            }
        }
    }

    checks.findings = findings;
    Ok(DecompositionReport {
        n,
        cyclic_x: x,
        basis_b,
        l_sub,
        lprime_sub,
        k_list,
        c_list,
        reduced_pairs,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat, rat_int};
    use crate::liealg::basis_vec;

    #[test]
    fn build_aff_brackets() {
        // n = 1: [E0_0, e0] = e0
        let a1 = build_aff(1);
        assert_eq!(a1.dim(), 2);
        assert_eq!(a1.bracket_basis(1, 0), &basis_vec(2, 0)[..]);

        // n = 2: [E0_1, e1] = e0 and [E0_1, E1_0] = E0_0 - E1_1
        let a2 = build_aff(2);
        assert_eq!(a2.dim(), 6);
        let e01 = unit_index(2, 0, 1);
        let e10 = unit_index(2, 1, 0);
        assert_eq!(a2.bracket_basis(e01, 1), &basis_vec(6, 0)[..]);
        let mut expected = vec![Rational::zero(); 6];
        expected[unit_index(2, 0, 0)] = rat_int(1);
        expected[unit_index(2, 1, 1)] = rat_int(-1);
        assert_eq!(a2.bracket_basis(e01, e10), &expected[..]);
    }

    #[test]
    fn translations_form_abelian_ideal() {
        for n in 1..=3 {
            let a = build_aff(n);
            let t = Subspace::coordinate_span(aff_dim(n), &(0..n).collect::<Vec<_>>());
            assert!(a.ideal_check(&t));
            for i in 0..n {
                for j in 0..n {
                    assert!(a.bracket_basis(i, j).iter().all(Rational::is_zero));
                }
            }
        }
    }

    #[test]
    fn functional_covector_examples() {
        let zero = AffFunctional::new(2, vec![rat_int(0); 2], Matrix::zeros(2, 2));
        assert!(zero.covector().iter().all(Rational::is_zero));

        let a = AffFunctional::new(1, vec![rat_int(1)], Matrix::zeros(1, 1));
        assert_eq!(a.covector(), basis_vec(2, 0));

        // n = 2, M the unit at (0, 1): tr(M E_ij) = M[j][i] hits E1_0.
        let mut m = Matrix::zeros(2, 2);
        m[(0, 1)] = rat_int(1);
        let a = AffFunctional::new(2, vec![rat_int(0); 2], m);
        assert_eq!(a.covector(), basis_vec(6, unit_index(2, 1, 0)));
    }

    #[test]
    fn orbit_openness() {
        // n = 1, (g, M) = (1, 0): delta is the standard 2-dim form.
        let a = AffFunctional::new(1, vec![rat_int(1)], Matrix::zeros(1, 1));
        assert!(orbit_is_open(&a));

        for n in 1..=3 {
            assert!(orbit_is_open(&regular_functional(n)), "regular pair n={n}");
            let g_zero = AffFunctional::new(
                n,
                vec![Rational::zero(); n],
                regular_functional(n).m().clone(),
            );
            assert!(!orbit_is_open(&g_zero), "g = 0 must be closed, n={n}");
        }
    }

    #[test]
    fn orientation_signs_at_n1() {
        let plus = AffFunctional::new(1, vec![rat_int(1)], Matrix::zeros(1, 1));
        let minus = AffFunctional::new(1, vec![rat_int(-1)], Matrix::zeros(1, 1));
        assert_eq!(orientation(&plus).unwrap(), 1);
        assert_eq!(orientation(&minus).unwrap(), -1);

        let degenerate = AffFunctional::new(1, vec![rat_int(0)], Matrix::zeros(1, 1));
        assert_eq!(orientation(&degenerate), Err(AffError::OrbitNotOpen));
    }

    #[test]
    fn coadjoint_generator_formulas() {
        // identity fixes everything
        let beta = regular_functional(2);
        let id = AffGroupElement::identity(2);
        assert_eq!(coadjoint_apply(&id, &beta), beta);

        // (0, 2I) at n = 1: (1, 0) -> (1/2, 0)
        let beta = AffFunctional::new(1, vec![rat_int(1)], Matrix::zeros(1, 1));
        let el = AffGroupElement::new(vec![rat_int(0)], Matrix::from_rows(vec![vec![rat_int(2)]]))
            .unwrap();
        let image = coadjoint_apply(&el, &beta);
        assert_eq!(image.g(), &[rat(1, 2)]);
        assert!(image.m().is_zero());

        // (x, I) with x = 3 at n = 1: (1, 0) -> (1, 3)
        let el = AffGroupElement::new(vec![rat_int(3)], Matrix::identity(1)).unwrap();
        let image = coadjoint_apply(&el, &beta);
        assert_eq!(image.g(), &[rat_int(1)]);
        assert_eq!(image.m()[(0, 0)], rat_int(3));
    }

    #[test]
    fn group_element_rejects_singular_t() {
        assert_eq!(
            AffGroupElement::new(vec![rat_int(0)], Matrix::zeros(1, 1)).unwrap_err(),
            AffError::SingularT
        );
    }

    #[test]
    fn momentum_translation_examples() {
        let g = vec![rat_int(1)];
        assert_eq!(
            momentum_translations(&g, &AffGroupElement::identity(1)),
            g
        );
        let el = AffGroupElement::new(vec![rat_int(0)], Matrix::from_rows(vec![vec![rat_int(2)]]))
            .unwrap();
        assert_eq!(momentum_translations(&g, &el), vec![rat(1, 2)]);

        let t = Matrix::from_rows(vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(3)],
        ]);
        let el = AffGroupElement::new(vec![rat_int(0); 2], t).unwrap();
        let g = vec![rat_int(0), rat_int(1)];
        assert_eq!(momentum_translations(&g, &el), vec![rat_int(0), rat(1, 3)]);
    }

    #[test]
    fn cyclic_vector_examples() {
        let a = AffFunctional::new(1, vec![rat_int(1)], Matrix::zeros(1, 1));
        assert_eq!(cyclic_vector(&a).unwrap(), vec![rat_int(1)]);

        // n = 2 regular: x = e0 since g(e0) = 0, g(N e0) = g(e1) = 1.
        let r = regular_functional(2);
        assert_eq!(cyclic_vector(&r).unwrap(), basis_vec(2, 0));

        let g_zero = AffFunctional::new(2, vec![rat_int(0); 2], r.m().clone());
        assert_eq!(cyclic_vector(&g_zero), Err(AffError::NoCyclicVector));
    }

    #[test]
    fn reduced_pair_at_n2() {
        let r = regular_functional(2);
        let rp = reduced_pair(&r).unwrap();
        // g1 = tN g = e0*
        assert_eq!(rp.g1, vec![rat_int(1), rat_int(0)]);
        assert!(rp.m1.is_zero());
        assert_eq!(rp.m1.rows(), 1);
        let next = rp.next.unwrap();
        assert_eq!(next.n(), 1);
        assert!(orbit_is_open(&next));
    }

    #[test]
    fn reduced_pair_at_n3_is_regular() {
        let rp = reduced_pair(&regular_functional(3)).unwrap();
        assert_eq!(rp.m1.rows(), 2);
        assert!(rp.m1.is_nilpotent());
        assert_eq!(rp.m1.rank(), 1, "single Jordan block on 2 dims");
        let next = rp.next.unwrap();
        assert!(orbit_is_open(&next));
    }

    #[test]
    fn reduced_pair_terminal_stage() {
        let a = AffFunctional::new(1, vec![rat_int(1)], Matrix::zeros(1, 1));
        let rp = reduced_pair(&a).unwrap();
        assert_eq!(rp.g1, vec![rat_int(0)]);
        assert_eq!(rp.m1.rows(), 0);
        assert!(rp.next.is_none());
    }

    #[test]
    fn reduced_pair_rejects_non_nilpotent() {
        let m = Matrix::identity(2);
        let a = AffFunctional::new(2, vec![rat_int(0), rat_int(1)], m);
        assert!(matches!(reduced_pair(&a), Err(AffError::NotNilpotent)));
    }

    #[test]
    fn orthogonal_splitting_dimensions() {
        // n = 1, M = 0: C(M) = gl(R^1), I_perp = span{e0}.
        let a = AffFunctional::new(1, vec![rat_int(1)], Matrix::zeros(1, 1));
        let split = orthogonal_splitting(&a).unwrap();
        assert_eq!(split.orthogonal.dim(), 1);
        assert_eq!(split.commutant.dim(), 1);

        // n = 2 regular: commutant of a regular nilpotent has dim 2.
        let split = orthogonal_splitting(&regular_functional(2)).unwrap();
        assert_eq!(split.orthogonal.dim(), 4);
        assert_eq!(split.commutant.dim(), 2);
        assert_eq!(split.orthogonal.dim() + split.commutant.dim(), aff_dim(2));
    }

    #[test]
    fn lagrangian_pair_small_cases() {
        for n in 1..=3 {
            let report = lagrangian_pair(&regular_functional(n)).unwrap();
            assert_eq!(report.l_sub.dim(), n * (n + 1) / 2);
            assert_eq!(report.lprime_sub.dim(), n * (n + 1) / 2);
            assert!(
                report.checks.all_pass(),
                "n={n} findings: {:?}",
                report.checks.findings
            );
            assert_eq!(report.k_list.len(), n);
            assert_eq!(report.c_list.len(), n);
            assert_eq!(report.reduced_pairs.len(), n);
        }
    }

    #[test]
    fn lagrangian_pair_rejects_bad_inputs() {
        let closed = AffFunctional::new(2, vec![rat_int(0); 2], regular_functional(2).m().clone());
        assert!(matches!(
            lagrangian_pair(&closed),
            Err(AffError::OrbitNotOpen) | Err(AffError::NoCyclicVector)
        ));
        let non_nilpotent = AffFunctional::new(1, vec![rat_int(1)], Matrix::identity(1));
        assert!(matches!(
            lagrangian_pair(&non_nilpotent),
            Err(AffError::NotNilpotent)
        ));
    }
}
