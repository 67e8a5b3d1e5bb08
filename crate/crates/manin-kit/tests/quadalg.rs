mod common;

use std::sync::Arc;

use common::*;
use manin_kit::exactlin::{Field, Matrix, Subspace};
use manin_kit::quadalg::{
    coreflection, coreflection_universal, morphism_from_degree1, white_relations_agree, AlgError, GradedAlgebra, GradedMap, Presented, QuadraticAlgebra,
};
use proptest::prelude::*;

fn labels(n: usize) -> Vec<String> {
    QuadraticAlgebra::default_labels("x", n)
}

#[test]
fn hilbert_functions_of_standard_algebras() {
    let f = q();
    for n in 1usize..=3 {
        let free: Vec<usize> = (0..=4u32).map(|k| n.pow(k)).collect();
        assert_eq!(QuadraticAlgebra::free(f, n).graded(4).dims(), free);
        let sym: Vec<usize> = (0..=4usize).map(|k| binom(n + k - 1, k)).collect();
        let s = QuadraticAlgebra::symmetric(f, labels(n));
        assert_eq!(s.graded(4).dims(), sym);
        let ext: Vec<usize> = (0..=4usize).map(|k| binom(n, k)).collect();
        assert_eq!(s.dual().graded(4).dims(), ext);
    }
    for qv in [1, 2, 3, -1] {
        assert_eq!(QuadraticAlgebra::quantum_plane(f, f.int(qv)).graded(6).dims(), vec![1, 2, 3, 4, 5, 6, 7]);
    }
    assert_eq!(QuadraticAlgebra::dual_numbers(f).graded(3).dims(), vec![1, 1, 0, 0]);
    assert_eq!(QuadraticAlgebra::unit(f).graded(3).dims(), vec![1, 1, 1, 1]);
}

#[test]
fn quantum_plane_dual_relations() {
    // (xy − q·yx)^⊥ is spanned by x'x', y'y' and q·x'y' + y'x'.
    let f = q();
    let a = QuadraticAlgebra::quantum_plane(f, f.int(2));
    let expect = Subspace::span(
        f,
        4,
        vec![vec![f.int(1), f.int(0), f.int(0), f.int(0)], vec![f.int(0), f.int(0), f.int(0), f.int(1)], vec![f.int(0), f.int(2), f.int(1), f.int(0)]],
    )
    .unwrap();
    assert_eq!(a.dual().relations(), &expect);
    assert_eq!(a.dual().labels(), &["x'".to_string(), "y'".to_string()]);
    assert_eq!(a.dual().graded(3).dims(), vec![1, 2, 1, 0]);
}

#[test]
fn koszul_pairs_have_inverse_hilbert_series() {
    // H_A(t)·H_{A^!}(−t) = 1 for Koszul algebras, checked through degree 4.
    let f = q();
    let algebras = [
        QuadraticAlgebra::symmetric(f, labels(3)),
        QuadraticAlgebra::quantum_plane(f, f.int(3)),
        QuadraticAlgebra::free(f, 2),
        QuadraticAlgebra::dual_numbers(f),
    ];
    for a in algebras {
        let h: Vec<i64> = a.graded(4).dims().into_iter().map(|d| d as i64).collect();
        let g: Vec<i64> = a.dual().graded(4).dims().into_iter().map(|d| d as i64).collect();
        for k in 0..=4 {
            let c: i64 = (0..=k).map(|i| h[i] * g[k - i] * if (k - i) % 2 == 0 { 1 } else { -1 }).sum();
            assert_eq!(c, i64::from(k == 0), "{a:?} at degree {k}");
        }
    }
}

#[test]
fn products_with_the_unit() {
    let f = fp(3);
    let a = QuadraticAlgebra::quantum_plane(f, f.int(2));
    let u = QuadraticAlgebra::unit(f);
    assert_eq!(u.white(&a).unwrap().relations(), a.relations());
    assert_eq!(a.white(&u).unwrap().relations(), a.relations());
    // K[u]^! = K[u]/(u²) is the unit for •.
    let d = u.dual();
    assert_eq!(d.black(&a).unwrap().relations(), a.relations());
}

#[test]
fn field_mismatch_is_rejected() {
    let a = QuadraticAlgebra::free(q(), 1);
    let b = QuadraticAlgebra::free(fp(2), 1);
    assert!(matches!(a.white(&b), Err(AlgError::Lin(_))));
}

#[test]
fn morphisms_of_the_quantum_plane() {
    let f = q();
    let a = QuadraticAlgebra::quantum_plane(f, f.int(2));
    // Diagonal scalings preserve xy − 2yx; the swap does not.
    let diag = Matrix::from_ints(f, &[&[2, 0], &[0, 3]]);
    let m = morphism_from_degree1(&diag, &a, &a, 3).unwrap();
    assert!(m.check_multiplicative(3).is_ok());
    let swap = Matrix::from_ints(f, &[&[0, 1], &[1, 0]]);
    assert!(matches!(morphism_from_degree1(&swap, &a, &a, 3), Err(AlgError::RelationNotPreserved { .. })));
    let b = QuadraticAlgebra::quantum_plane(f, f.ratio(1, 2).unwrap());
    assert!(morphism_from_degree1(&swap, &a, &b, 3).is_ok());
}

#[test]
fn coreflection_of_a_cubic_truncation() {
    // T = K⟨x,y⟩/(x y x): quadratic cover is the free algebra.
    let f = fp(2);
    let mut v = vec![f.zero(); 8];
    v[0b010] = f.one();
    let t = GradedAlgebra::Presented(Arc::new(Presented::new(f, labels(2), &[(3, v)], 3).unwrap()));
    let g = coreflection(&t).unwrap();
    assert_eq!(g.algebra.relations().dim(), 0);
    assert_eq!(g.algebra.graded(3).dims(), vec![1, 2, 4, 8]);
    assert_eq!(t.dims(), vec![1, 2, 4, 7]);
    let r = coreflection_universal(&QuadraticAlgebra::free(f, 1), &t, 1 << 20).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.candidates, 4);
}

#[test]
fn coreflection_needs_degree_two() {
    let t = QuadraticAlgebra::free(q(), 2).graded(1);
    assert!(matches!(coreflection(&t), Err(AlgError::TooShallow(2))));
}

#[test]
fn white_product_dimensions_on_the_corpus_algebras() {
    let f = q();
    let algebras = [
        QuadraticAlgebra::unit(f),
        QuadraticAlgebra::dual_numbers(f),
        QuadraticAlgebra::free(f, 2),
        QuadraticAlgebra::quantum_plane(f, f.int(2)),
        QuadraticAlgebra::symmetric(f, labels(2)).dual(),
    ];
    for a in &algebras {
        for b in &algebras {
            let w = a.white(b).unwrap().graded(4).dims();
            let expect: Vec<usize> = a.graded(4).dims().iter().zip(b.graded(4).dims()).map(|(x, y)| x * y).collect();
            assert_eq!(w, expect, "{a:?} ∘ {b:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn truncation_matches_subspace_oracle(a in any_algebra(3, 3)) {
        prop_assert_eq!(a.graded(3).dims(), dims_by_subspaces(&a, 3));
    }

    #[test]
    fn dual_is_an_involution(a in any_algebra(3, 5)) {
        let dd = a.dual().dual();
        prop_assert_eq!(dd.relations(), a.relations());
        prop_assert_eq!(a.dual().relations().dim() + a.relations().dim(), a.gens() * a.gens());
    }

    #[test]
    fn dual_exchanges_white_and_black((a, b) in field().prop_flat_map(|f| (algebra(f, 2, 3), algebra(f, 2, 3)))) {
        let lhs = a.white(&b).unwrap().dual();
        let rhs = a.dual().black(&b.dual()).unwrap();
        prop_assert_eq!(lhs.relations(), rhs.relations());
    }

    #[test]
    fn black_relation_count((a, b) in field().prop_flat_map(|f| (algebra(f, 2, 3), algebra(f, 2, 3)))) {
        prop_assert_eq!(a.black(&b).unwrap().relations().dim(), a.relations().dim() * b.relations().dim());
    }

    #[test]
    fn white_presentation_covers_componentwise((a, b) in field().prop_flat_map(|f| (algebra(f, 2, 2), algebra(f, 2, 2)))) {
        let presented = a.white(&b).unwrap().graded(3).dims();
        let componentwise = GradedAlgebra::white(&a.graded(3), &b.graded(3)).dims();
        for k in 0..=3 {
            if k <= 2 {
                prop_assert_eq!(presented[k], componentwise[k]);
            } else {
                prop_assert!(presented[k] >= componentwise[k]);
            }
        }
        // The identity on generators is a morphism onto the componentwise product.
        let id = Matrix::identity(a.field(), a.gens() * b.gens());
        let m = GradedMap::generated(a.white(&b).unwrap().graded(3), GradedAlgebra::white(&a.graded(3), &b.graded(3)), id).unwrap();
        prop_assert!(m.check_multiplicative(3).is_ok());
    }

    #[test]
    fn white_relations_agree_with_coreflection((a, b) in field().prop_flat_map(|f| (algebra(f, 2, 3), algebra(f, 2, 3)))) {
        prop_assert!(white_relations_agree(&a, &b).unwrap());
    }

    #[test]
    fn coreflection_of_a_quadratic_algebra_is_itself(a in any_algebra(2, 3)) {
        let g = coreflection(&a.graded(3)).unwrap();
        prop_assert_eq!(g.algebra.relations(), a.relations());
    }

    #[test]
    fn coreflection_is_universal((b, t) in finite_field().prop_flat_map(|f| (algebra(f, 1, 1), prop::collection::vec(vector(f, 8), 0..=2).prop_map(move |cubic| {
        let gens: Vec<(usize, _)> = cubic.into_iter().map(|v| (3, v)).collect();
        GradedAlgebra::Presented(Arc::new(Presented::new(f, labels(2), &gens, 3).unwrap()))
    })))) {
        let r = coreflection_universal(&b, &t, 1 << 20).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
    }

    #[test]
    fn relations_are_field_consistent(f in field(), n in 1usize..3) {
        let a = QuadraticAlgebra::free(f, n);
        prop_assert_eq!(a.relations().field(), f);
        prop_assert!(QuadraticAlgebra::new(Field::Rational, labels(n + 1), Subspace::zero(f, n * n)).is_err());
    }
}
