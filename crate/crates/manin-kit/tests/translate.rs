mod common;

use common::*;
use manin_kit::cohomcoend::cohom;
use manin_kit::exactlin::Matrix;
use manin_kit::linrep::{linearize, FiniteMonoid, VecBimonoid, VecMonoid};
use manin_kit::quadalg::GradedMap;
use manin_kit::translate::{
    lift_and_check, lift_rep, phi_comonoid_check, phi_naturality_check, phi_sigma_check, phi_transform, verify_lift_monoidality, Functor,
};
use proptest::prelude::*;

#[test]
fn objects_have_the_expected_hilbert_functions() {
    let f = q();
    for n in 1usize..=3 {
        let t = Functor::TStar.object(f, n).unwrap().graded(4).dims();
        assert_eq!(t, (0..=4u32).map(|k| n.pow(k)).collect::<Vec<_>>());
        let s = Functor::SStar.object(f, n).unwrap().graded(4).dims();
        assert_eq!(s, (0..=4usize).map(|k| binom(n + k - 1, k)).collect::<Vec<_>>());
    }
}

#[test]
fn sstar_needs_odd_characteristic() {
    assert!(Functor::SStar.object(fp(2), 2).is_err());
    assert!(Functor::SStar.object(fp(3), 2).is_ok());
    assert!(Functor::TStar.object(fp(2), 2).is_ok());
}

#[test]
fn phi_is_invertible_for_tstar() {
    for f in [q(), fp(3)] {
        for v in 1..=2 {
            let p = phi_transform(Functor::TStar, f, v, v, 3).unwrap();
            assert_eq!(p.iso, vec![true; 4], "{f} dim {v}");
        }
    }
}

#[test]
fn phi_for_sstar_fails_from_degree_two() {
    let f = q();
    assert!(phi_transform(Functor::SStar, f, 1, 1, 3).unwrap().is_iso());
    let p = phi_transform(Functor::SStar, f, 2, 2, 3).unwrap();
    assert_eq!(p.iso, vec![true, true, false, false]);
    // cohom(S(V*), S(V*)) = Λ•S is bigger than S(end V*) from degree 2 on.
    let s = Functor::SStar.object(f, 2).unwrap();
    let c = cohom(&s, &s, 3).unwrap();
    let dims = c.graded().dims();
    assert_eq!(dims, dims_by_subspaces(&c.algebra, 3));
    let sym4: Vec<usize> = (0..=3usize).map(|k| binom(4 + k - 1, k)).collect();
    assert_eq!(&dims[..2], &sym4[..2]);
    assert!(dims[2] > sym4[2] && dims[3] > sym4[3]);
}

#[test]
fn phi_is_a_comonoid_morphism() {
    for functor in [Functor::TStar, Functor::SStar] {
        for v in 1..=2 {
            assert!(phi_comonoid_check(functor, q(), v, 3).is_ok(), "{} dim {v}", functor.name());
        }
    }
}

#[test]
fn phi_is_compatible_with_sigma() {
    for dims in [[1, 1, 1, 1], [2, 1, 1, 2], [1, 2, 2, 1]] {
        assert!(phi_sigma_check(Functor::TStar, q(), dims, 3).is_ok(), "{dims:?}");
    }
}

#[test]
fn lifts_of_the_corpus_reps() {
    let fx = manin_kit::fixture::Fixture::load(&fixtures_dir().join("algebras_q.fx")).unwrap();
    for (functor, rep) in [(Functor::TStar, "nilpotent"), (Functor::TStar, "split"), (Functor::SStar, "split"), (Functor::SStar, "nilpotent")] {
        let r = &fx.reps[rep];
        let m = fx.monoid_of(&r.over).unwrap();
        assert!(lift_and_check(functor, m, &r.rho(), r.dim, 3).is_ok(), "{} {rep}", functor.name());
    }
}

#[test]
fn lifting_a_non_representation_fails() {
    // t ↦ I is not a rep of the dual numbers: t² = 0 but I² ≠ 0.
    let f = q();
    let x = VecMonoid::dual_numbers(f);
    let rho = linearize(&[Matrix::identity(f, 1), Matrix::identity(f, 1)]);
    assert!(lift_and_check(Functor::TStar, &x, &rho, 1, 2).is_err());
}

#[test]
fn bimonoids_need_a_strong_functor() {
    let b = VecBimonoid::monoid_bialgebra(fp(3), &FiniteMonoid::cyclic(2));
    let x = Functor::TStar.bimonoid(&b, 3).unwrap();
    assert!(x.check(3).is_ok());
    assert!(Functor::SStar.bimonoid(&b, 3).is_err());
}

#[test]
fn lifting_is_monoidal_for_z2_reps() {
    let f = fp(3);
    let b = VecBimonoid::monoid_bialgebra(f, &FiniteMonoid::cyclic(2));
    let one = Matrix::identity(f, 1);
    let sign = linearize(&[one.clone(), one.scale(&f.int(-1))]);
    let trivial = linearize(&[one.clone(), one]);
    assert!(verify_lift_monoidality(Functor::TStar, &b, &sign, 1, &trivial, 1, 3).is_ok());
    assert!(verify_lift_monoidality(Functor::TStar, &b, &sign, 1, &sign, 1, 3).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn arrows_are_contravariant((a, b) in field().prop_flat_map(|f| (matrix(f, 2, 1), matrix(f, 1, 2)))) {
        // F(a·b) = F(b)·F(a).
        let lhs = Functor::TStar.arrow(&a.mul(&b).unwrap(), 3).unwrap();
        let rhs = Functor::TStar.arrow(&a, 3).unwrap().then(&Functor::TStar.arrow(&b, 3).unwrap()).unwrap();
        prop_assert!(lhs.agree(&rhs, 3).is_ok());
        let f = a.field();
        let id = Functor::TStar.arrow(&Matrix::identity(f, 2), 3).unwrap();
        prop_assert!(id.agree(&GradedMap::identity(Functor::TStar.object(f, 2).unwrap().graded(3)), 3).is_ok());
    }

    #[test]
    fn phi_is_natural(functor in prop_oneof![Just(Functor::TStar), Just(Functor::SStar)], (b, a) in (matrix(q(), 2, 1), matrix(q(), 1, 2))) {
        prop_assert!(phi_naturality_check(functor, &b, &a, 2).is_ok());
    }

    #[test]
    fn lifted_cyclic_reps_are_coreps(g in matrix(fp(3), 2, 2).prop_filter("g³ = 1", |g| {
        let g3 = g.mul(g).unwrap().mul(g).unwrap();
        g3 == Matrix::identity(fp(3), 2)
    })) {
        let f = fp(3);
        let rho = linearize(&[Matrix::identity(f, 2), g.clone(), g.mul(&g).unwrap()]);
        let x = VecMonoid::monoid_algebra(f, &FiniteMonoid::cyclic(3));
        prop_assert!(lift_and_check(Functor::TStar, &x, &rho, 2, 2).is_ok());
        let lifted = lift_rep(Functor::TStar, &rho, 2, 2).unwrap();
        prop_assert!(lifted.omega.check_multiplicative(2).is_ok());
    }

    #[test]
    fn phi_sstar_on_one_dimensional_spaces(f in prop_oneof![Just(q()), Just(fp(3)), Just(fp(5))]) {
        let p = phi_transform(Functor::SStar, f, 1, 1, 4).unwrap();
        prop_assert!(p.is_iso());
    }
}
