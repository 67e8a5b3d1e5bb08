#![allow(dead_code)]

use manin_kit::exactlin::Subspace;
use manin_kit::exactlin::{Field, Matrix, Scalar};
use manin_kit::quadalg::QuadraticAlgebra;
use proptest::prelude::*;

pub fn q() -> Field {
    Field::Rational
}

pub fn fp(p: u16) -> Field {
    Field::prime(p).unwrap()
}

pub fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(q()), Just(fp(2)), Just(fp(3)), Just(fp(5))]
}

pub fn finite_field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(fp(2)), Just(fp(3))]
}

pub fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let mut m = Matrix::zero(f, rows, cols);
        for (k, x) in v.into_iter().enumerate() {
            m.set(k / cols, k % cols, f.int(x));
        }
        m
    })
}

pub fn vector(f: Field, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-3i64..=3, n).prop_map(move |v| v.into_iter().map(|x| f.int(x)).collect())
}

/// A quadratic algebra on `n` generators with up to `max_rels` random relations.
pub fn algebra(f: Field, n: usize, max_rels: usize) -> impl Strategy<Value = QuadraticAlgebra> {
    prop::collection::vec(vector(f, n * n), 0..=max_rels).prop_map(move |rels| {
        let r = Subspace::span(f, n * n, rels).unwrap();
        QuadraticAlgebra::new(f, QuadraticAlgebra::default_labels("x", n), r).unwrap()
    })
}

pub fn any_algebra(max_gens: usize, max_rels: usize) -> impl Strategy<Value = QuadraticAlgebra> {
    (field(), 1..=max_gens).prop_flat_map(move |(f, n)| algebra(f, n, max_rels))
}

pub fn fixtures_dir() -> std::path::PathBuf {
    std::path::PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim A_k = n^k − dim Σ_i V^{⊗i}⊗R⊗V^{⊗(k−2−i)}`, straight from subspaces.
pub fn dims_by_subspaces(a: &QuadraticAlgebra, top: usize) -> Vec<usize> {
    let f = a.field();
    let n = a.gens();
    let mut out = vec![1];
    for k in 1..=top {
        let total = n.pow(k as u32);
        if k < 2 {
            out.push(total);
            continue;
        }
        let mut ideal = Subspace::zero(f, total);
        for i in 0..=k - 2 {
            let left = Subspace::full(f, n.pow(i as u32));
            let right = Subspace::full(f, n.pow((k - 2 - i) as u32));
            let piece = left.tensor(a.relations()).unwrap().tensor(&right).unwrap();
            ideal = ideal.sum(&piece).unwrap();
        }
        out.push(total - ideal.dim());
    }
    out
}

/// An algebra from a corpus file, by name when the file holds several.
pub fn fixture_algebra(file: &str, name: Option<&str>) -> QuadraticAlgebra {
    let fx = manin_kit::fixture::Fixture::load(&fixtures_dir().join(file)).unwrap();
    fx.algebra(name).unwrap().clone()
}
