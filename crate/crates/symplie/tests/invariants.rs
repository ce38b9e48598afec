//! Property tests for the algebraic invariants that hold for every input:
//! exact linear algebra contracts, bracket/ad compatibility, the
//! left-symmetric product identities, orthogonality, the coadjoint action of
//! the affine group, and orbit openness criteria.

use proptest::prelude::*;

use symplie::affn::{
    build_aff, coadjoint_apply, cyclic_vector, momentum_translations, orbit_is_open, orientation,
    AffFunctional, AffGroupElement,
};
use symplie::catalog;
use symplie::exactlin::{rat, Matrix, Rational, Subspace};
use symplie::liealg::basis_vec;
use symplie::symplectic::coboundary;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn vector(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small_rational(), len)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(small_rational(), rows * cols).prop_map(move |data| {
        Matrix::from_fn(rows, cols, |r, c| data[r * cols + c].clone())
    })
}

/// Invertible matrix as L * U with unit lower part and nonzero diagonal.
fn invertible(n: usize, positive_det: bool) -> impl Strategy<Value = Matrix> {
    let diag_entry = if positive_det {
        prop_oneof![Just(rat(1, 1)), Just(rat(2, 1)), Just(rat(1, 2)), Just(rat(3, 1))].boxed()
    } else {
        prop_oneof![Just(rat(1, 1)), Just(rat(-1, 1)), Just(rat(2, 1)), Just(rat(-1, 2))].boxed()
    };
    (
        proptest::collection::vec(small_rational(), n * n),
        proptest::collection::vec(small_rational(), n * n),
        proptest::collection::vec(diag_entry, n),
    )
        .prop_map(move |(lo, up, diag)| {
            let mut l = Matrix::identity(n);
            let mut u = Matrix::zeros(n, n);
            for r in 0..n {
                for c in 0..n {
                    if r > c {
                        l[(r, c)] = lo[r * n + c].clone();
                    }
                    if r < c {
                        u[(r, c)] = up[r * n + c].clone();
                    }
                }
                u[(r, r)] = diag[r].clone();
            }
            &l * &u
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solve_reproduces_consistent_rhs(a in matrix(3, 4), x in vector(4)) {
        let b = a.mul_vec(&x);
        let solved = a.solve(&b).expect("constructed system is consistent");
        prop_assert_eq!(a.mul_vec(&solved), b);
    }

    #[test]
    fn kernel_is_annihilated_and_rank_nullity_holds(a in matrix(3, 5)) {
        let k = Subspace::kernel(&a);
        prop_assert_eq!(k.dim() + a.rank(), a.cols());
        for i in 0..k.dim() {
            prop_assert!(a.mul_vec(k.basis().row(i)).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn det_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        let ab = &a * &b;
        prop_assert_eq!(
            ab.det().unwrap(),
            a.det().unwrap() * b.det().unwrap()
        );
    }

    #[test]
    fn subspace_canonical_form_ignores_generating_order(
        rows in proptest::collection::vec(vector(4), 1..4),
        seed in 0usize..24,
    ) {
        let direct = Subspace::from_spanning(4, rows.clone());
        let mut shuffled = rows.clone();
        // rotate and duplicate a generator: same span, different presentation
        shuffled.rotate_left(seed % rows.len());
        shuffled.push(rows[seed % rows.len()].clone());
        let other = Subspace::from_spanning(4, shuffled);
        prop_assert_eq!(direct, other);
    }

    #[test]
    fn orthogonal_dim_and_involution(coords in proptest::collection::vec(vector(4), 0..3)) {
        let s = catalog::symplectic("heis4").unwrap();
        let w = Subspace::from_spanning(4, coords);
        let orth = s.orthogonal(&w);
        prop_assert_eq!(w.dim() + orth.dim(), 4);
        prop_assert_eq!(s.orthogonal(&orth), w);
    }

    #[test]
    fn coboundaries_are_cocycles_for_every_covector(alpha in vector(6)) {
        // the constructor asserts closedness internally
        let aff2 = build_aff(2);
        let delta = coboundary(&aff2, &alpha);
        prop_assert!(delta.is_antisymmetric());
    }
}

#[test]
fn ad_matrix_matches_bracket_on_catalog_entries() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for name in catalog::NAMES {
        let s = catalog::symplectic(name).unwrap();
        let l = s.algebra().clone();
        let n = l.dim();
        let strategy = (vector(n), vector(n));
        for _ in 0..16 {
            let (x, y) = strategy.new_tree(&mut runner).unwrap().current();
            assert_eq!(l.ad_matrix(&x).mul_vec(&y), l.bracket(&x, &y), "{name}");
            assert_eq!(l.coad_matrix(&x), -&l.ad_matrix(&x).transpose(), "{name}");
        }
    }
}

#[test]
fn jacobi_as_ad_homomorphism_on_catalog_entries() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for name in ["heis4", "aff1", "aff2"] {
        let l = catalog::symplectic(name).unwrap().algebra().clone();
        let n = l.dim();
        for _ in 0..16 {
            let (x, y) = (vector(n), vector(n))
                .new_tree(&mut runner)
                .unwrap()
                .current();
            let lhs = l.ad_matrix(&l.bracket(&x, &y));
            let ax = l.ad_matrix(&x);
            let ay = l.ad_matrix(&y);
            let rhs = &(&ax * &ay) - &(&ay * &ax);
            assert_eq!(lhs, rhs, "{name}");
        }
    }
}

#[test]
fn momentum_series_linear_term_is_interior_product() {
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for name in catalog::NAMES {
        let s = catalog::symplectic(name).unwrap();
        for _ in 0..8 {
            let x = vector(s.dim()).new_tree(&mut runner).unwrap().current();
            assert_eq!(s.momentum_cocycle(&x, Some(1)).unwrap(), s.interior(&x));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coadjoint_action_is_a_homomorphism(
        x1 in vector(2), t1 in invertible(2, false),
        x2 in vector(2), t2 in invertible(2, false),
        g in vector(2), m in matrix(2, 2),
    ) {
        let el1 = AffGroupElement::new(x1, t1).unwrap();
        let el2 = AffGroupElement::new(x2, t2).unwrap();
        let beta = AffFunctional::new(2, g, m);
        let composed = coadjoint_apply(&el1.compose(&el2), &beta);
        let sequential = coadjoint_apply(&el1, &coadjoint_apply(&el2, &beta));
        prop_assert_eq!(composed, sequential);
    }

    #[test]
    fn momentum_matches_g_component_for_any_m(
        x in vector(3), t in invertible(3, false),
        g in vector(3), m in matrix(3, 3),
    ) {
        let el = AffGroupElement::new(x, t).unwrap();
        let beta = AffFunctional::new(3, g.clone(), m);
        let image = coadjoint_apply(&el, &beta);
        prop_assert_eq!(momentum_translations(&g, &el), image.g().to_vec());
    }

    #[test]
    fn openness_cyclic_vector_and_iterates_agree(g in vector(2), m in matrix(2, 2)) {
        let alpha = AffFunctional::new(2, g.clone(), m.clone());
        let open = orbit_is_open(&alpha);
        let cyclic = cyclic_vector(&alpha).is_ok();
        // rows g M^(n-1), ..., g
        let gm = m.vec_mul(&g);
        let iterates = Matrix::from_rows(vec![gm, g]);
        let iterates_regular = !iterates.det().unwrap().is_zero();
        prop_assert_eq!(open, cyclic);
        prop_assert_eq!(open, iterates_regular);
    }

    #[test]
    fn orientation_is_invariant_on_the_identity_component(
        x in vector(2), t in invertible(2, true), scale in 1i64..4,
    ) {
        // start from the regular datum, scaled to vary within the orbit pair
        let base = symplie::affn::regular_functional(2);
        let alpha = AffFunctional::new(
            2,
            base.g().iter().map(|v| v * &rat(scale, 1)).collect(),
            base.m().clone(),
        );
        prop_assume!(orbit_is_open(&alpha));
        let el = AffGroupElement::new(x, t).unwrap();
        let moved = coadjoint_apply(&el, &alpha);
        prop_assert!(orbit_is_open(&moved));
        prop_assert_eq!(orientation(&moved).unwrap(), orientation(&alpha).unwrap());
    }
}

#[test]
fn basis_vec_sanity() {
    assert_eq!(basis_vec(3, 1), vec![rat(0, 1), rat(1, 1), rat(0, 1)]);
}
