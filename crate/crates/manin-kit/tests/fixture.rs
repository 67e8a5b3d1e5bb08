mod common;

use common::*;
use manin_kit::fixture::{parse, write_algebra, CategoryDef, Fixture, FixtureError};
use manin_kit::linrep::rep_check;
use manin_kit::quadalg::QuadraticAlgebra;
use proptest::prelude::*;

fn err_at(src: &str) -> (usize, usize, String) {
    let e = parse(src).unwrap_err();
    (e.line, e.col, e.message)
}

#[test]
fn every_corpus_file_parses() {
    let mut count = 0;
    for entry in std::fs::read_dir(fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        let fx = Fixture::load(&path).unwrap_or_else(|e| panic!("{e}"));
        count += 1;
        for (name, r) in &fx.reps {
            let x = fx.monoid_of(&r.over).unwrap();
            assert!(rep_check(&r.rho(), x, r.dim).is_ok(), "{}: {name}", path.display());
        }
        for (name, b) in &fx.bimonoids {
            assert!(b.bimonoid.check().is_ok(), "{}: {name}", path.display());
        }
    }
    assert!(count >= 10);
}

#[test]
fn algebra_sections() {
    let fx = parse("@field F5\n@algebra qp\ngens x y\nrel 1 x y -2 y x\n").unwrap();
    let a = fx.algebra(None).unwrap();
    assert_eq!(a, &QuadraticAlgebra::quantum_plane(fp(5), fp(5).int(2)));
    assert_eq!(a.labels(), &["x".to_string(), "y".to_string()]);
    // Repeated words add up.
    let fx = parse("@field Q\n@algebra a\ngens x\nrel 1 x x 1/2 x x\n").unwrap();
    assert_eq!(fx.algebras["a"].relations().dim(), 1);
}

#[test]
fn errors_carry_line_and_column() {
    assert_eq!(err_at("@field Q\n@algebra a\ngens x y\nrel 1 x z\n"), (4, 9, "undeclared label `z`".into()));
    assert_eq!(err_at("@field Q9\n").0, 1);
    assert_eq!(err_at("@field Q9\n").1, 8);
    assert_eq!(err_at("@algebra a\ngens x\n"), (1, 1, "missing @field line".into()));
    assert_eq!(err_at("@field Q\ngens x\n").2, "entry before any section header");
    assert_eq!(err_at("@field Q\n@algebra a\ngens x x\n"), (3, 8, "duplicate label `x`".into()));
    assert_eq!(err_at("@field Q\n@algebra a\nrel 1 x x\n").2, "`rel` before `gens`");
    assert_eq!(err_at("@field Q\n@algebra a\ngens x\n@algebra a\ngens y\n"), (4, 10, "section name `a` is used twice".into()));
    assert_eq!(err_at("@field Q\n@widget a\n").2, "unknown section `@widget`");
    assert!(err_at("@field Q\n@algebra a\ngens x\nrel 1 x\n").2.contains("groups"));
    assert!(err_at("@field F3\n@algebra a\ngens x\nrel 1/3 x x\n").2.contains("not a scalar"));
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let fx = parse("# header\n\n@field Q   # the rationals\n@algebra a # name\n  gens x  y\n\n").unwrap();
    assert_eq!(fx.algebras["a"].gens(), 2);
}

#[test]
fn monoid_tables() {
    let fx = parse("@field F3\n@monoid z3\nelements e a b\ntimes a a b\ntimes a b e\ntimes b a e\ntimes b b a\n").unwrap();
    let m = fx.monoids["z3"].finite.as_ref().unwrap();
    assert_eq!(m.times(1, 2), 0);
    assert!(fx.monoids["z3"].monoid.check().is_ok());
    let (_, _, msg) = err_at("@field F3\n@monoid m\nelements e a\n");
    assert_eq!(msg, "missing product a a");
    let (_, _, msg) = err_at("@field F3\n@monoid m\nelements e a\ntimes a a e\ntimes a a a\n");
    assert_eq!(msg, "product given twice");
    assert!(err_at("@field F3\n@monoid m\nelements e a b\ntimes a a b\ntimes a b b\ntimes b a a\ntimes b b b\n").2.contains("not associative"));
}

#[test]
fn structure_constant_monoids() {
    let fx = Fixture::load(&fixtures_dir().join("algebras_q.fx")).unwrap();
    assert_eq!(fx.monoids["dual"].monoid, manin_kit::linrep::VecMonoid::dual_numbers(q()));
    assert_eq!(fx.monoids["diag"].monoid, manin_kit::linrep::VecMonoid::diagonal(q()));
    assert!(fx.monoids["dual"].finite.is_none());
}

#[test]
fn rep_sections() {
    let base = "@field F3\n@bimonoid z2\nelements e g\ntimes g g e\n";
    let fx = parse(&format!("{base}@rep s\nover z2\ndim 1\nact e 1\nact g -1\n")).unwrap();
    assert_eq!(fx.reps["s"].actions[1].get(0, 0), &fp(3).int(2));
    assert_eq!(err_at(&format!("{base}@rep s\nover z3\ndim 1\n")), (6, 6, "no monoid or bimonoid named `z3` above this section".into()));
    assert_eq!(err_at(&format!("{base}@rep s\nover z2\ndim 1\nact e 1\n")).2, "no action given for `g`");
    assert!(err_at(&format!("{base}@rep s\nover z2\ndim 2\nact e 1 0 0\n")).2.contains("4 entries"));
}

#[test]
fn category_sections() {
    let fx = Fixture::load(&fixtures_dir().join("categories.cat")).unwrap();
    assert!(matches!(fx.categories["chain"], CategoryDef::Preorder(_)));
    assert!(matches!(fx.categories["idem"], CategoryDef::Explicit(_)));
    assert_eq!(err_at("@field Q\n@category c\nkind tree\n").2, "unknown category kind `tree`");
    assert_eq!(err_at("@field Q\n@category c\nobjects a\ntensor a a a\n").2, "monoidal tables are only supported for preorders");
    assert_eq!(err_at("@field Q\n@category c\nkind preorder\nobjects a b\nleq a b\nunit a\n").2, "missing tensor a a");
    assert!(err_at("@field Q\n@category c\nobjects a\narrow e a a\n").2.contains("missing composite"));
}

#[test]
fn load_reports_the_path() {
    let e = Fixture::load(std::path::Path::new("/nonexistent/x.alg")).unwrap_err();
    assert!(matches!(e, FixtureError::Io(..)));
    assert!(e.to_string().starts_with("/nonexistent/x.alg: "));
}

#[test]
fn written_algebras_are_readable() {
    let a = QuadraticAlgebra::quantum_plane(q(), q().ratio(-1, 2).unwrap()).dual();
    let text = write_algebra("d", &a);
    assert_eq!(text, "@algebra d\ngens x' y'\nrel 1 x' x'\nrel 1 x' y' -2 y' x'\nrel 1 y' y'\n");
}

proptest! {
    #[test]
    fn write_then_parse_round_trips(a in any_algebra(3, 4)) {
        let text = format!("@field {}\n{}", a.field(), write_algebra("a", &a));
        let fx = parse(&text).unwrap();
        prop_assert_eq!(&fx.algebras["a"], &a);
    }
}
