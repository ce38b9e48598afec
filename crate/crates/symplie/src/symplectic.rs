//! Symplectic structures on Lie algebras.
//!
//! A [`SymplecticStructure`] is a validated pair of a Lie algebra and an
//! antisymmetric, closed (2-cocycle), nondegenerate scalar form. From it we
//! derive the canonical left-symmetric product, orthogonals and the
//! isotropic/coisotropic/Lagrangian classification, symplectic reduction by
//! an ideal, exactness (Frobenius) solving, and the momentum-cocycle series.
//!
//! Sign conventions, fixed once for the whole crate:
//!
//! - coboundary: `(delta a)(x, y) = -a([x, y])`;
//! - left-symmetric product: `x*y` is the unique vector with
//!   `omega(x*y, z) = -omega(y, [x, z])` for all `z`;
//! - coadjoint operator on covectors: `(ad*(x) b)(v) = -b([x, v])`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{Matrix, Rational, Subspace};
use crate::liealg::{basis_vec, LieAlgebra, LieError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error("omega is not antisymmetric at entry ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("omega is not closed: cocycle sum nonzero on basis triple (e{i}, e{j}, e{k})")]
    NotClosed { i: usize, j: usize, k: usize },
    #[error("omega is degenerate; witness kernel vector [{}]", witness.join(", "))]
    Degenerate { witness: Vec<String> },
    #[error("the given subspace is not an ideal of the algebra")]
    NotAnIdeal,
    #[error("ad*(x) is not nilpotent; pass a truncation order for the series")]
    NotNilpotent,
    #[error("internal invariant violated: {context}")]
    InternalInvariantViolation { context: String },
}

impl From<LieError> for SymplecticError {
    fn from(e: LieError) -> Self {
        SymplecticError::InternalInvariantViolation {
            context: format!("quotient bracket failed validation: {e}"),
        }
    }
}

/// A Lie algebra together with a validated symplectic form.
#[derive(Clone, PartialEq, Eq)]
pub struct SymplecticStructure {
    algebra: LieAlgebra,
    omega: Matrix,
}

impl SymplecticStructure {
    /// Validates the three structure invariants and returns the pair.
    ///
    /// Checks, in order: antisymmetry (entry witness), the 2-cocycle identity
    /// `omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0` on all basis
    /// triples (triple witness), and nondegeneracy (a kernel vector of omega
    /// as witness).
    pub fn new(algebra: LieAlgebra, omega: Matrix) -> Result<Self, SymplecticError> {
        let n = algebra.dim();
        assert!(
            omega.rows() == n && omega.cols() == n,
            "omega must be {n}x{n}"
        );
        for i in 0..n {
            for j in i..n {
                if omega[(i, j)] != -omega[(j, i)].clone() {
                    return Err(SymplecticError::NotAntisymmetric { i, j });
                }
            }
        }
        let s = SymplecticStructure { algebra, omega };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !s.cocycle_sum(i, j, k).is_zero() {
                        return Err(SymplecticError::NotClosed { i, j, k });
                    }
                }
            }
        }
        let radical = Subspace::kernel(&s.omega);
        if !radical.is_zero() {
            return Err(SymplecticError::Degenerate {
                witness: radical
                    .basis_vec(0)
                    .iter()
                    .map(crate::exactlin::format_rational)
                    .collect(),
            });
        }
        Ok(s)
    }

    fn cocycle_sum(&self, i: usize, j: usize, k: usize) -> Rational {
        let l = &self.algebra;
        self.eval_vec_basis(l.bracket_basis(i, j), k)
            + self.eval_vec_basis(l.bracket_basis(j, k), i)
            + self.eval_vec_basis(l.bracket_basis(k, i), j)
    }

    /// omega(v, e_k) for a coordinate vector v.
    fn eval_vec_basis(&self, v: &[Rational], k: usize) -> Rational {
        let mut acc = Rational::zero();
        for (a, x) in v.iter().enumerate() {
            if !x.is_zero() {
                acc += x * &self.omega[(a, k)];
            }
        }
        acc
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// omega(u, v) on coordinate vectors.
    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    acc += &(a * b) * &self.omega[(i, j)];
                }
            }
        }
        acc
    }

    /// The covector `i(x) omega = omega(x, .)`.
    pub fn interior(&self, x: &[Rational]) -> Vec<Rational> {
        self.omega.vec_mul(x)
    }

    /// omega-orthogonal of a subspace: `{y : omega(w, y) = 0 for all w in W}`.
    ///
    /// Nondegeneracy gives `dim W + dim W_perp = dim` and involutivity.
    pub fn orthogonal(&self, w: &Subspace) -> Subspace {
        assert_eq!(w.ambient_dim(), self.dim(), "ambient dimension mismatch");
        Subspace::kernel(&(w.basis() * &self.omega))
    }

    /// Classification of a subspace relative to omega.
    pub fn classify(&self, w: &Subspace) -> SubspaceClass {
        let orth = self.orthogonal(w);
        let iso = orth.contains_subspace(w);
        let coiso = w.contains_subspace(&orth);
        match (iso, coiso) {
            (true, true) => SubspaceClass::Lagrangian,
            (true, false) => SubspaceClass::Isotropic,
            (false, true) => SubspaceClass::Coisotropic,
            (false, false) => {
                if w.intersect(&orth).is_zero() {
                    SubspaceClass::Symplectic
                } else {
                    SubspaceClass::Generic
                }
            }
        }
    }

    /// The left-symmetric product induced by omega: for each pair of basis
    /// vectors, `e_i * e_j` is the unique solution of
    /// `omega(e_i * e_j, z) = -omega(e_j, [e_i, z])` over all basis `z`.
    ///
    /// Left-symmetry and bracket compatibility are re-verified on all basis
    /// triples; a failure is an internal defect (closedness guarantees both).
    pub fn lsa_product(&self) -> Result<LsaTable, SymplecticError> {
        let n = self.dim();
        let omega_t = self.omega.transpose();
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            let ad_i = self.algebra.ad_matrix(&basis_vec(n, i));
            for j in 0..n {
                // rhs[k] = -omega(e_j, [e_i, e_k])
                let rhs: Vec<Rational> = (0..n)
                    .map(|k| -self.eval_row(j, &ad_i.col_vec(k)))
                    .collect();
                let w = omega_t.solve(&rhs).ok_or_else(|| {
                    SymplecticError::InternalInvariantViolation {
                        context: format!("product e{i}*e{j} has no solution"),
                    }
                })?;
                table[i][j] = w;
            }
        }
        let lsa = LsaTable { dim: n, a: table };
        lsa.verify_against(self)?;
        Ok(lsa)
    }

    /// omega(e_j, v).
    fn eval_row(&self, j: usize, v: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (k, x) in v.iter().enumerate() {
            if !x.is_zero() {
                acc += &self.omega[(j, k)] * x;
            }
        }
        acc
    }

    /// Restriction of the structure to a subalgebra subspace, expressed in
    /// the subspace's canonical basis. Fails if `w` is not closed under the
    /// bracket or the restricted form is degenerate.
    pub fn restrict(&self, w: &Subspace) -> Result<SymplecticStructure, SymplecticError> {
        self.quotient(w, &Subspace::zero(self.dim())).map(|(s, _)| s)
    }

    /// Symplectic reduction by an ideal `I`: computes `I_perp` and
    /// `K = I intersect I_perp`, verifies the structural consequences, and
    /// builds the reduced structure on `I_perp / K`.
    pub fn reduce(&self, iso: &Subspace) -> Result<ReductionStep, SymplecticError> {
        if !self.algebra.ideal_check(iso) {
            return Err(SymplecticError::NotAnIdeal);
        }
        let orth = self.orthogonal(iso);
        let kernel = iso.intersect(&orth);
        let lsa = self.lsa_product()?;

        // I_perp is closed under both the bracket and the induced product.
        if !self.algebra.subalgebra_check(&orth) {
            return Err(SymplecticError::InternalInvariantViolation {
                context: "orthogonal of an ideal is not a Lie subalgebra".into(),
            });
        }
        for a in 0..orth.dim() {
            for b in 0..orth.dim() {
                let p = lsa.product(orth.basis().row(a), orth.basis().row(b));
                if !orth.contains(&p) {
                    return Err(SymplecticError::InternalInvariantViolation {
                        context: "orthogonal of an ideal is not closed under the product".into(),
                    });
                }
            }
        }
        // K is a 2-sided product ideal of I_perp with trivial induced product.
        for a in 0..kernel.dim() {
            for b in 0..orth.dim() {
                let left = lsa.product(kernel.basis().row(a), orth.basis().row(b));
                let right = lsa.product(orth.basis().row(b), kernel.basis().row(a));
                if !kernel.contains(&left) || !kernel.contains(&right) {
                    return Err(SymplecticError::InternalInvariantViolation {
                        context: "kernel is not a 2-sided product ideal of the orthogonal".into(),
                    });
                }
            }
            for b in 0..kernel.dim() {
                let p = lsa.product(kernel.basis().row(a), kernel.basis().row(b));
                if p.iter().any(|x| !x.is_zero()) {
                    return Err(SymplecticError::InternalInvariantViolation {
                        context: "induced product on the kernel is not trivial".into(),
                    });
                }
            }
        }

        let mode = if kernel.is_zero() {
            ReductionMode::Discrete
        } else {
            ReductionMode::Reduced
        };
        let iso_restricted = match mode {
            // K = 0 splits the algebra: both factors carry symplectic forms.
            ReductionMode::Discrete => Some(self.restrict(iso)?),
            ReductionMode::Reduced => None,
        };
        let (reduced, projection) = self.quotient(&orth, &kernel)?;
        Ok(ReductionStep {
            ambient: self.clone(),
            iso_basis: iso.clone(),
            orth_basis: orth,
            kernel_basis: kernel,
            reduced,
            projection,
            mode,
            iso_restricted,
        })
    }

    /// Quotient of a subalgebra subspace `w` by an ideal `k` of `w` contained
    /// in the radical of the restricted form. Returns the reduced structure
    /// on the deterministic complement (non-pivot coordinates of `k` inside
    /// `w`) and the projection matrix from `w`-coordinates onto reduced
    /// coordinates.
    pub fn quotient(
        &self,
        w: &Subspace,
        k: &Subspace,
    ) -> Result<(SymplecticStructure, Matrix), SymplecticError> {
        let m = w.dim();
        if !w.contains_subspace(k) {
            return Err(SymplecticError::InternalInvariantViolation {
                context: "quotient kernel is not contained in the subspace".into(),
            });
        }
        // Push-forward well-definedness: omega(k, w) = 0.
        for a in 0..k.dim() {
            for b in 0..m {
                if !self.eval(k.basis().row(a), w.basis().row(b)).is_zero() {
                    return Err(SymplecticError::InternalInvariantViolation {
                        context: "kernel is not omega-orthogonal to the subspace".into(),
                    });
                }
            }
        }
        // k in w-coordinates, re-echelonized there.
        let k_coords: Vec<Vec<Rational>> = (0..k.dim())
            .map(|a| {
                w.coordinates(k.basis().row(a)).ok_or(
                    SymplecticError::InternalInvariantViolation {
                        context: "kernel vector lies outside the subspace".into(),
                    },
                )
            })
            .collect::<Result<_, _>>()?;
        let k_in_w = Subspace::from_spanning(m, k_coords);
        let pivots = k_in_w.pivots().to_vec();
        let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
        let r = free.len();

        // projection[(a, b)]: coefficient of reduced coordinate a in the
        // class of w-coordinate b, eliminating pivot coordinates through the
        // echelon rows of k.
        let mut projection = Matrix::zeros(r, m);
        for (a, &f) in free.iter().enumerate() {
            projection[(a, f)] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                projection[(a, p)] = -k_in_w.basis()[(row, f)].clone();
            }
        }

        // Reduced representatives: the w-basis rows at free coordinates.
        let reps: Vec<Vec<Rational>> = free.iter().map(|&f| w.basis_vec(f)).collect();
        let zero = vec![Rational::zero(); r];
        let mut tensor = vec![vec![zero; r]; r];
        for a in 0..r {
            for b in 0..r {
                if a == b {
                    continue;
                }
                let br = self.algebra.bracket(&reps[a], &reps[b]);
                let coords = w.coordinates(&br).ok_or_else(|| {
                    SymplecticError::InternalInvariantViolation {
                        context: "bracket left the subalgebra during quotient".into(),
                    }
                })?;
                tensor[a][b] = projection.mul_vec(&coords);
            }
        }
        let reduced_algebra = LieAlgebra::from_tensor(r, tensor)?;
        let reduced_omega = Matrix::from_fn(r, r, |a, b| self.eval(&reps[a], &reps[b]));
        let reduced = SymplecticStructure::new(reduced_algebra, reduced_omega)?;
        Ok((reduced, projection))
    }

    /// Exact solution of `delta a = omega` with free variables zeroed;
    /// `None` when omega is not a coboundary.
    pub fn frobenius_solve(&self) -> Option<Vec<Rational>> {
        let n = self.dim();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                rows.push(self.algebra.bracket_basis(i, j).to_vec());
                rhs.push(-self.omega[(i, j)].clone());
            }
        }
        if rows.is_empty() {
            // dim 0: the empty form is the coboundary of the zero covector
            return Some(vec![Rational::zero(); n]);
        }
        let alpha = Matrix::from_rows(rows).solve(&rhs)?;
        debug_assert_eq!(coboundary(&self.algebra, &alpha), self.omega);
        Some(alpha)
    }

    /// The momentum-cocycle series at `x`:
    /// `Q(exp x) = sum_{k>=1} (1/k!) (ad*(x))^(k-1) (i(x) omega)`.
    ///
    /// With `max_order = None` the operator `ad*(x)` must be nilpotent
    /// (checked by powers up to the dimension) and the finite sum is exact;
    /// otherwise the series is truncated after the `max_order` term.
    pub fn momentum_cocycle(
        &self,
        x: &[Rational],
        max_order: Option<usize>,
    ) -> Result<Vec<Rational>, SymplecticError> {
        assert_eq!(x.len(), self.dim(), "argument of wrong length");
        let n = self.dim();
        let coad = self.algebra.coad_matrix(x);
        let order = match max_order {
            Some(k) => k,
            None => {
                if !coad.is_nilpotent() {
                    return Err(SymplecticError::NotNilpotent);
                }
                n
            }
        };
        let mut term = self.interior(x); // (ad*(x))^(k-1) i(x)omega, at k = 1
        let mut acc = vec![Rational::zero(); n];
        let mut factorial = Rational::one();
        for k in 1..=order {
            factorial *= Rational::from_integer(k.into());
            let coeff = factorial.clone().recip();
            for (dst, t) in acc.iter_mut().zip(&term) {
                if !t.is_zero() {
                    *dst = &*dst + &(&coeff * t);
                }
            }
            if k < order {
                term = coad.mul_vec(&term);
            }
        }
        Ok(acc)
    }
}

impl std::fmt::Debug for SymplecticStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SymplecticStructure(dim {})", self.dim())
    }
}

/// Coboundary of a covector against an algebra's bracket:
/// `(delta a)[i][j] = -a([e_i, e_j])`.
///
/// The result is always antisymmetric and closed; closedness is re-checked
/// and a failure panics, since it would mean the algebra violates Jacobi.
pub fn coboundary(algebra: &LieAlgebra, alpha: &[Rational]) -> Matrix {
    let n = algebra.dim();
    assert_eq!(alpha.len(), n, "covector of wrong length");
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let mut acc = Rational::zero();
            for (k, s) in algebra.bracket_basis(i, j).iter().enumerate() {
                if !s.is_zero() {
                    acc += s * &alpha[k];
                }
            }
            let v = -acc;
            m[(j, i)] = -v.clone();
            m[(i, j)] = v;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let sum = eval_form(&m, algebra.bracket_basis(i, j), k)
                    + eval_form(&m, algebra.bracket_basis(j, k), i)
                    + eval_form(&m, algebra.bracket_basis(k, i), j);
                assert!(sum.is_zero(), "coboundary failed the cocycle identity");
            }
        }
    }
    m
}

/// m(v, e_k) for an antisymmetric matrix m.
fn eval_form(m: &Matrix, v: &[Rational], k: usize) -> Rational {
    let mut acc = Rational::zero();
    for (a, x) in v.iter().enumerate() {
        if !x.is_zero() {
            acc += x * &m[(a, k)];
        }
    }
    acc
}

/// Position of a subspace relative to the symplectic form. A Lagrangian
/// subspace is reported as such and answers true to both the isotropic and
/// coisotropic flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceClass {
    Symplectic,
    Isotropic,
    Coisotropic,
    Lagrangian,
    Generic,
}

impl SubspaceClass {
    pub fn is_isotropic(self) -> bool {
        matches!(self, SubspaceClass::Isotropic | SubspaceClass::Lagrangian)
    }

    pub fn is_coisotropic(self) -> bool {
        matches!(self, SubspaceClass::Coisotropic | SubspaceClass::Lagrangian)
    }

    pub fn label(self) -> &'static str {
        match self {
            SubspaceClass::Symplectic => "symplectic",
            SubspaceClass::Isotropic => "isotropic",
            SubspaceClass::Coisotropic => "coisotropic",
            SubspaceClass::Lagrangian => "lagrangian",
            SubspaceClass::Generic => "generic",
        }
    }
}

/// Structure constants of the induced left-symmetric product.
#[derive(Clone, PartialEq, Eq)]
pub struct LsaTable {
    dim: usize,
    /// a[i][j] is the coordinate vector of e_i * e_j.
    a: Vec<Vec<Vec<Rational>>>,
}

impl LsaTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinate vector of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        &self.a[i][j]
    }

    /// Bilinear extension `u * v`.
    pub fn product(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim, "left argument of wrong length");
        assert_eq!(v.len(), self.dim, "right argument of wrong length");
        let mut acc = vec![Rational::zero(); self.dim];
        for (i, x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in v.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let coeff = x * y;
                for (k, s) in self.a[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        acc[k] = &acc[k] + &(&coeff * s);
                    }
                }
            }
        }
        acc
    }

    /// Left-symmetry defect `(xy)z - x(yz) - (yx)z + y(xz)` on basis triples.
    fn associator_defect(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim;
        let ek = basis_vec(n, k);
        let a = self.product(&self.a[i][j], &ek);
        let b = self.product(&basis_vec(n, i), &self.product(&basis_vec(n, j), &ek));
        let c = self.product(&self.a[j][i], &ek);
        let d = self.product(&basis_vec(n, j), &self.product(&basis_vec(n, i), &ek));
        (0..n)
            .map(|t| &(&a[t] - &b[t]) - &(&c[t] - &d[t]))
            .collect()
    }

    /// Checks bracket compatibility `xy - yx = [x,y]` and left-symmetry
    /// `(xy)z - x(yz) = (yx)z - y(xz)` on all basis pairs/triples.
    fn verify_against(&self, s: &SymplecticStructure) -> Result<(), SymplecticError> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let diff: Vec<Rational> = self.a[i][j]
                    .iter()
                    .zip(&self.a[j][i])
                    .map(|(x, y)| x - y)
                    .collect();
                if diff != s.algebra.bracket_basis(i, j) {
                    return Err(SymplecticError::InternalInvariantViolation {
                        context: format!("product incompatible with bracket at (e{i}, e{j})"),
                    });
                }
            }
        }
        // The defect is antisymmetric in (x, y): i < j with every z suffices.
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    if self.associator_defect(i, j, k).iter().any(|x| !x.is_zero()) {
                        return Err(SymplecticError::InternalInvariantViolation {
                            context: format!("left-symmetry fails on (e{i}, e{j}, e{k})"),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for LsaTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LsaTable(dim {})", self.dim)
    }
}

/// Whether a reduction split off a symplectic pair (`Discrete`, trivial
/// kernel) or passed to a genuine quotient (`Reduced`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionMode {
    Discrete,
    Reduced,
}

impl ReductionMode {
    pub fn label(self) -> &'static str {
        match self {
            ReductionMode::Discrete => "discrete",
            ReductionMode::Reduced => "reduced",
        }
    }
}

/// One symplectic reduction: the isotropic datum, its orthogonal, the kernel
/// `K = I intersect I_perp`, and the reduced structure on `I_perp / K` with
/// the projection from `I_perp`-coordinates onto reduced coordinates.
#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub ambient: SymplecticStructure,
    pub iso_basis: Subspace,
    pub orth_basis: Subspace,
    pub kernel_basis: Subspace,
    pub reduced: SymplecticStructure,
    pub projection: Matrix,
    pub mode: ReductionMode,
    /// In discrete mode, the restriction of the structure to the ideal
    /// itself (the other symplectic factor).
    pub iso_restricted: Option<SymplecticStructure>,
}
