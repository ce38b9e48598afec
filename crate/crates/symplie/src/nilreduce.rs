//! Central reduction of nilpotent symplectic Lie algebras.
//!
//! A nonzero central element `z` spans an isotropic ideal `H`; its
//! orthogonal `H_perp` is an ideal of the full algebra and `H_perp / H`
//! carries the pushed-forward symplectic structure two dimensions down.
//! Iterating with the deterministic choice of `z` (the first echelon basis
//! row of the center) walks any nilpotent symplectic algebra to dimension
//! zero in exactly `dim/2` steps, and [`is_double_extension`] checks the
//! converse description: a totally isotropic subalgebra `H` whose quotient
//! `H_perp / H` is again symplectic.

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{Rational, Subspace};
use crate::symplectic::{ReductionStep, SymplecticError, SymplecticStructure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilReduceError {
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("the given element is not central (or is zero)")]
    NotCentral,
    #[error("nilpotent algebra of positive dimension reported a trivial center")]
    TrivialCenter,
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
}

/// One central reduction step.
///
/// `z` (optional) must be a nonzero central element; when absent, the first
/// echelon basis row of the center is used. The reduced structure lives on
/// `H_perp / H` with `H = span z`, and the dimension drops by exactly 2.
pub fn central_reduction(
    s: &SymplecticStructure,
    z: Option<&[Rational]>,
) -> Result<ReductionStep, NilReduceError> {
    let (nilpotent, _) = s.algebra().is_nilpotent();
    if !nilpotent {
        return Err(NilReduceError::NotNilpotent);
    }
    let center = s.algebra().center();
    let z = match z {
        Some(z) => {
            if z.iter().all(Rational::is_zero) || !center.contains(z) {
                return Err(NilReduceError::NotCentral);
            }
            z.to_vec()
        }
        None => {
            if center.is_zero() {
                return Err(NilReduceError::TrivialCenter);
            }
            center.basis_vec(0)
        }
    };
    let h = Subspace::from_spanning(s.dim(), vec![z]);
    // A central line is an ideal, so the general reduction applies; the
    // extra content here is that H_perp must be an ideal of the full algebra.
    let step = s.reduce(&h)?;
    if !s.algebra().ideal_check(&step.orth_basis) {
        return Err(NilReduceError::Symplectic(
            SymplecticError::InternalInvariantViolation {
                context: "orthogonal of a central line is not an ideal".into(),
            },
        ));
    }
    if step.reduced.dim() + 2 != s.dim() {
        return Err(NilReduceError::Symplectic(
            SymplecticError::InternalInvariantViolation {
                context: "central reduction did not drop the dimension by 2".into(),
            },
        ));
    }
    Ok(step)
}

/// Full chain of central reductions down to the zero algebra; returns
/// exactly `dim/2` steps, each fully validated.
pub fn reduction_chain(s: &SymplecticStructure) -> Result<Vec<ReductionStep>, NilReduceError> {
    let mut steps = Vec::with_capacity(s.dim() / 2);
    let mut current = s.clone();
    while current.dim() > 0 {
        let step = central_reduction(&current, None)?;
        let next = step.reduced.clone();
        steps.push(step);
        current = next;
    }
    Ok(steps)
}

/// Outcome of a double-extension check: either the reduced structure, or the
/// first violated clause.
#[derive(Debug, Clone)]
pub enum DoubleExtensionVerdict {
    Yes { reduced: SymplecticStructure },
    No { reason: DoubleExtensionFailure },
}

impl DoubleExtensionVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, DoubleExtensionVerdict::Yes { .. })
    }

    pub fn reduced(&self) -> Option<&SymplecticStructure> {
        match self {
            DoubleExtensionVerdict::Yes { reduced } => Some(reduced),
            DoubleExtensionVerdict::No { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoubleExtensionFailure {
    #[error("H is not a subalgebra")]
    NotSubalgebra,
    #[error("H is not totally isotropic")]
    NotIsotropic,
    #[error("[H, H_perp] is not contained in H, so the quotient bracket is undefined")]
    QuotientUndefined,
    #[error("the pushed-forward form on H_perp/H is not a valid symplectic structure: {0}")]
    ReducedInvalid(String),
}

/// Checks whether `s` is a symplectic double extension along `h`, that is:
/// `h` is a totally isotropic subalgebra, `[h, h_perp]` lies in `h` (making
/// the quotient bracket well defined), and the pushed-forward form on
/// `h_perp / h` validates. On success the reduced structure is returned.
pub fn is_double_extension(s: &SymplecticStructure, h: &Subspace) -> DoubleExtensionVerdict {
    if !s.algebra().subalgebra_check(h) {
        return DoubleExtensionVerdict::No {
            reason: DoubleExtensionFailure::NotSubalgebra,
        };
    }
    // The zero subspace is a degenerate extension of s itself.
    if !h.is_zero() && !s.classify(h).is_isotropic() {
        return DoubleExtensionVerdict::No {
            reason: DoubleExtensionFailure::NotIsotropic,
        };
    }
    let orth = s.orthogonal(h);
    for a in 0..h.dim() {
        for b in 0..orth.dim() {
            let br = s.algebra().bracket(h.basis().row(a), orth.basis().row(b));
            if !h.contains(&br) {
                return DoubleExtensionVerdict::No {
                    reason: DoubleExtensionFailure::QuotientUndefined,
                };
            }
        }
    }
    match s.quotient(&orth, h) {
        Ok((reduced, _)) => DoubleExtensionVerdict::Yes { reduced },
        Err(e) => DoubleExtensionVerdict::No {
            reason: DoubleExtensionFailure::ReducedInvalid(e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat_int, Matrix};
    use crate::liealg::{basis_vec, LieAlgebra};
    use crate::symplectic::ReductionMode;

    fn heis4() -> SymplecticStructure {
        let algebra = LieAlgebra::new(4, &[(0, 1, vec![(2, rat_int(1))])]).unwrap();
        let mut omega = Matrix::zeros(4, 4);
        omega[(0, 2)] = rat_int(1);
        omega[(2, 0)] = rat_int(-1);
        omega[(1, 3)] = rat_int(1);
        omega[(3, 1)] = rat_int(-1);
        SymplecticStructure::new(algebra, omega).unwrap()
    }

    fn abelian_standard(n: usize) -> SymplecticStructure {
        let mut omega = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            omega[(2 * i, 2 * i + 1)] = rat_int(1);
            omega[(2 * i + 1, 2 * i)] = rat_int(-1);
        }
        SymplecticStructure::new(LieAlgebra::abelian(2 * n), omega).unwrap()
    }

    #[test]
    fn central_reduction_on_heis4_matches_general_reduce() {
        let s = heis4();
        let z = basis_vec(4, 2);
        let step = central_reduction(&s, Some(&z)).unwrap();
        assert_eq!(step.mode, ReductionMode::Reduced);
        assert_eq!(step.reduced.dim(), 2);
        assert_eq!(step.reduced.omega()[(0, 1)], rat_int(1));
        assert!(step.reduced.algebra().derived_ideal().is_zero());

        let direct = s.reduce(&Subspace::coordinate_span(4, &[2])).unwrap();
        assert_eq!(step.reduced, direct.reduced);
    }

    #[test]
    fn central_reduction_on_abelian2() {
        let s = abelian_standard(1);
        let step = central_reduction(&s, Some(&basis_vec(2, 0))).unwrap();
        assert_eq!(step.reduced.dim(), 0);
    }

    #[test]
    fn central_reduction_rejects_non_central_element() {
        let s = heis4();
        assert!(matches!(
            central_reduction(&s, Some(&basis_vec(4, 0))),
            Err(NilReduceError::NotCentral)
        ));
        let zero = vec![Rational::zero(); 4];
        assert!(matches!(
            central_reduction(&s, Some(&zero)),
            Err(NilReduceError::NotCentral)
        ));
    }

    #[test]
    fn central_reduction_rejects_non_nilpotent() {
        let aff1 = LieAlgebra::new(2, &[(0, 1, vec![(0, rat_int(1))])]).unwrap();
        let omega = crate::symplectic::coboundary(&aff1, &basis_vec(2, 0));
        let s = SymplecticStructure::new(aff1, omega).unwrap();
        assert!(matches!(
            central_reduction(&s, None),
            Err(NilReduceError::NotNilpotent)
        ));
    }

    #[test]
    fn chain_on_heis4_has_two_steps() {
        let steps = reduction_chain(&heis4()).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].reduced.dim(), 2);
        assert_eq!(steps[1].reduced.dim(), 0);
    }

    #[test]
    fn chain_on_abelian_2n_has_n_steps() {
        for n in 1..=4 {
            let steps = reduction_chain(&abelian_standard(n)).unwrap();
            assert_eq!(steps.len(), n);
            for (k, step) in steps.iter().enumerate() {
                assert_eq!(step.reduced.dim(), 2 * n - 2 * (k + 1));
                assert!(step.reduced.algebra().derived_ideal().is_zero());
            }
        }
    }

    #[test]
    fn double_extension_on_heis4_center_line() {
        let s = heis4();
        let verdict = is_double_extension(&s, &Subspace::coordinate_span(4, &[2]));
        let reduced = verdict.reduced().expect("span{e2} is a valid datum");
        assert_eq!(reduced.dim(), 2);
        assert!(reduced.algebra().derived_ideal().is_zero());
    }

    #[test]
    fn double_extension_rejects_non_isotropic() {
        let s = heis4();
        // omega(e0, e2) = 1, so span{e0, e2} is not isotropic.
        let verdict = is_double_extension(&s, &Subspace::coordinate_span(4, &[0, 2]));
        match verdict {
            DoubleExtensionVerdict::No { reason } => {
                assert_eq!(reason, DoubleExtensionFailure::NotIsotropic)
            }
            DoubleExtensionVerdict::Yes { .. } => panic!("must be rejected"),
        }
    }

    #[test]
    fn double_extension_with_zero_subspace_is_identity() {
        let s = heis4();
        let verdict = is_double_extension(&s, &Subspace::zero(4));
        let reduced = verdict.reduced().unwrap();
        assert_eq!(reduced, &s);
    }

    #[test]
    fn chain_steps_are_double_extensions_with_matching_quotients() {
        let steps = reduction_chain(&heis4()).unwrap();
        let mut ambient = heis4();
        for step in &steps {
            let verdict = is_double_extension(&ambient, &step.iso_basis);
            let reduced = verdict.reduced().expect("chain datum must verify");
            assert_eq!(reduced, &step.reduced);
            ambient = step.reduced.clone();
        }
    }
}
