mod common;

use common::*;
use manin_kit::exactlin::{all_matrices, Field, Matrix};
use manin_kit::linrep::{
    action_check, action_from_rep, comp, count_reps_and_actions, ev, hom_map, hom_universality, linearize, monoid_hom_check, monoid_rep_bridge, pi,
    pi_law_suite, rep_check, rep_from_action, rep_morphism_check, tensor_action, tensor_rep, theta, theta_inverse, unit_rep, unvec, vec_of, FiniteMonoid,
    SemiLinearSet, VecBimonoid, VecMonoid,
};
use proptest::prelude::*;

/// Algebra maps `X → M_v(K)` counted directly: images `r_x` of the basis
/// with `r_x r_y = Σ_z μ^z_{xy} r_z` and `Σ_x η_x r_x = I`.
fn count_algebra_maps(x: &VecMonoid, v: usize) -> usize {
    let f = x.field();
    let n = x.dim;
    let mats: Vec<Matrix> = all_matrices(f, v, v, 1 << 16).unwrap().collect();
    let combo = |coeffs: &dyn Fn(usize) -> manin_kit::exactlin::Scalar, r: &[&Matrix]| {
        (0..n).fold(Matrix::zero(f, v, v), |acc, z| acc.add(&r[z].scale(&coeffs(z))).unwrap())
    };
    let mut count = 0;
    let mut idx = vec![0usize; n];
    loop {
        let r: Vec<&Matrix> = idx.iter().map(|&i| &mats[i]).collect();
        let unit_ok = combo(&|z| x.unit.get(z, 0).clone(), &r) == Matrix::identity(f, v);
        let mul_ok = unit_ok && (0..n).all(|a| (0..n).all(|b| r[a].mul(r[b]).unwrap() == combo(&|z| x.mul.get(z, a * n + b).clone(), &r)));
        count += usize::from(mul_ok);
        let mut pos = n;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < mats.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn monoids(f: Field) -> Vec<(&'static str, VecMonoid)> {
    vec![
        ("dual numbers", VecMonoid::dual_numbers(f)),
        ("K×K", VecMonoid::diagonal(f)),
        ("K[Z/2]", VecMonoid::monoid_algebra(f, &FiniteMonoid::cyclic(2))),
        ("K[{1,0}]", VecMonoid::monoid_algebra(f, &FiniteMonoid::one_zero())),
    ]
}

#[test]
fn rep_counts_over_f2() {
    // Nilpotent, idempotent, involutive and idempotent 2×2 matrices over F2.
    let expected = [[1, 4], [2, 8], [1, 4], [2, 8]];
    for ((name, x), counts) in monoids(fp(2)).into_iter().zip(expected) {
        assert!(x.check().is_ok(), "{name}");
        for v in 1..=2 {
            let c = count_reps_and_actions(&x, v, 1 << 20).unwrap();
            assert!(c.bijective, "{name} dim {v}");
            assert_eq!(c.reps, c.actions);
            assert_eq!(c.reps as usize, counts[v - 1], "{name} dim {v}");
            assert_eq!(count_algebra_maps(&x, v), counts[v - 1], "{name} dim {v}");
        }
    }
}

#[test]
fn rep_counts_over_f3() {
    // K[Z/2] in odd characteristic is K×K, so the two counts agree.
    let f = fp(3);
    for v in 1..=2 {
        let a = count_reps_and_actions(&VecMonoid::monoid_algebra(f, &FiniteMonoid::cyclic(2)), v, 1 << 20).unwrap();
        let b = count_reps_and_actions(&VecMonoid::diagonal(f), v, 1 << 20).unwrap();
        assert_eq!(a.reps, b.reps);
        assert_eq!(a.reps as usize, count_algebra_maps(&VecMonoid::diagonal(f), v));
    }
}

#[test]
fn pi_laws_hold_for_small_dimensions() {
    for f in [q(), fp(3)] {
        for (name, r) in pi_law_suite(f, 2) {
            assert!(r.is_ok(), "{f} {name}: {r:?}");
        }
    }
}

#[test]
fn composition_and_evaluation_on_matrix_units() {
    let f = q();
    let g = Matrix::from_ints(f, &[&[1, 2], &[3, 4], &[0, -1]]);
    let h = Matrix::from_ints(f, &[&[2, 0, 1], &[1, 1, 0]]);
    let composed = comp(f, 3, 2, 3).mul(&vec_of(&g).kron(&vec_of(&h)).unwrap()).unwrap();
    assert_eq!(unvec(&composed, 0, 3, 3), g.mul(&h).unwrap());
    let x = Matrix::from_ints(f, &[&[5], &[7]]);
    assert_eq!(ev(f, 2, 3).mul(&vec_of(&g).kron(&x).unwrap()).unwrap(), g.mul(&x).unwrap());
}

#[test]
fn monoid_tables_are_validated() {
    assert!(FiniteMonoid::new(vec!["a".into(), "b".into()], vec![vec![1, 0], vec![0, 0]]).is_err());
    assert!(FiniteMonoid::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 0]]).is_err());
    let m = FiniteMonoid::one_zero();
    assert_eq!(m.identity(), 0);
    assert_eq!(m.times(1, 0), 1);
}

#[test]
fn bridge_agrees_on_a_failing_rep() {
    let f = fp(3);
    let m = FiniteMonoid::cyclic(3);
    let bad = vec![Matrix::identity(f, 1), Matrix::from_ints(f, &[&[2]]), Matrix::from_ints(f, &[&[2]])];
    let (a, b) = monoid_rep_bridge(&m, &bad);
    assert!(a.is_err() && b.is_err());
    let good = vec![Matrix::identity(f, 1), Matrix::identity(f, 1), Matrix::identity(f, 1)];
    let (a, b) = monoid_rep_bridge(&m, &good);
    assert!(a.is_ok() && b.is_ok());
}

#[test]
fn hom_is_universal_for_small_semi_linear_sets() {
    let f = fp(2);
    for (z, a, b) in [((1, 1), (1, 1), (1, 1)), ((2, 1), (1, 1), (2, 1)), ((1, 1), (2, 1), (2, 1)), ((1, 2), (1, 1), (1, 1)), ((2, 1), (2, 1), (1, 1))] {
        let s = |(p, d): (usize, usize)| SemiLinearSet::new(f, p, d);
        let r = hom_universality(&s(z), &s(a), &s(b), 1 << 20).unwrap();
        assert!(r.is_bijection(), "{z:?} {a:?} {b:?}: {r:?}");
    }
}

#[test]
fn bialgebras_pass_their_laws() {
    for f in [q(), fp(2), fp(3)] {
        for m in [FiniteMonoid::cyclic(2), FiniteMonoid::cyclic(3), FiniteMonoid::one_zero(), FiniteMonoid::trivial()] {
            let b = VecBimonoid::monoid_bialgebra(f, &m);
            assert!(b.check().is_ok());
            assert!(b.is_cocommutative());
            assert!(rep_check(&unit_rep(&b), &b.monoid, 1).is_ok());
        }
    }
}

/// A representation of `Z/n` from a matrix `g` with `g^n = I`.
fn cyclic_rep(g: &Matrix, n: usize) -> Vec<Matrix> {
    let mut out = vec![Matrix::identity(g.field(), g.rows())];
    for _ in 1..n {
        out.push(out.last().unwrap().mul(g).unwrap());
    }
    out
}

fn involution(f: Field) -> impl Strategy<Value = Matrix> {
    matrix(f, 2, 2).prop_filter("g² = 1", move |g| g.mul(g).unwrap() == Matrix::identity(f, 2))
}

proptest! {
    #[test]
    fn theta_round_trips(m in field().prop_flat_map(|f| (1usize..3, 1usize..3, 1usize..3).prop_flat_map(move |(v, w, x)| (Just(v), matrix(f, w * v, x))))) {
        let (v, m) = m;
        prop_assert_eq!(theta_inverse(&theta(&m, v), v), m.clone());
        let g = theta(&m, v);
        prop_assert_eq!(theta(&theta_inverse(&g, v), v), g);
    }

    #[test]
    fn hom_map_acts_by_pre_and_post_composition((a, b, x) in field().prop_flat_map(|f| (matrix(f, 2, 3), matrix(f, 2, 1), matrix(f, 3, 2)))) {
        // hom(b, a) sends X to a·X·b.
        let image = hom_map(&b, &a).mul(&vec_of(&x)).unwrap();
        prop_assert_eq!(unvec(&image, 0, 2, 1), a.mul(&x).unwrap().mul(&b).unwrap());
    }

    #[test]
    fn pi_is_kronecker((g, h) in field().prop_flat_map(|f| (matrix(f, 2, 3), matrix(f, 1, 2)))) {
        let out = pi(g.field(), 3, 2, 2, 1).mul(&vec_of(&g).kron(&vec_of(&h)).unwrap()).unwrap();
        prop_assert_eq!(unvec(&out, 0, 2, 6), g.kron(&h).unwrap());
    }

    #[test]
    fn tensor_of_group_reps_is_kronecker((g, h) in finite_field().prop_flat_map(|f| (involution(f), involution(f)))) {
        let f = g.field();
        let b = VecBimonoid::monoid_bialgebra(f, &FiniteMonoid::cyclic(2));
        let (rg, rh) = (cyclic_rep(&g, 2), cyclic_rep(&h, 2));
        prop_assert!(monoid_hom_check(&FiniteMonoid::cyclic(2), &rg).is_ok());
        let t = tensor_rep(&linearize(&rg), 2, &linearize(&rh), 2, &b);
        let expect: Vec<Matrix> = rg.iter().zip(&rh).map(|(x, y)| x.kron(y).unwrap()).collect();
        prop_assert_eq!(&t, &linearize(&expect));
        prop_assert!(rep_check(&t, &b.monoid, 4).is_ok());
        let a = tensor_action(&action_from_rep(&linearize(&rg), 2), 2, &action_from_rep(&linearize(&rh), 2), 2, &b);
        prop_assert!(action_check(&a, &b.monoid, 4).is_ok());
        prop_assert_eq!(rep_from_action(&a, 4), t);
    }

    #[test]
    fn intertwiners_of_involutions((g, p) in finite_field().prop_flat_map(|f| (involution(f), matrix(f, 2, 2)))) {
        // p intertwines g with p g p⁻¹ when p is invertible.
        let Some(pinv) = p.inverse() else { return Ok(()) };
        let conj = p.mul(&g).unwrap().mul(&pinv).unwrap();
        let (r1, r2) = (linearize(&cyclic_rep(&g, 2)), linearize(&cyclic_rep(&conj, 2)));
        prop_assert!(rep_morphism_check(&p, &r1, &r2).is_ok());
    }
}
