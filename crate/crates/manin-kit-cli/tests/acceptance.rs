//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Every comparison is an exact equality over an exact field, so the only
//! tolerances are the wall-clock limits pinned below.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use manin_kit::cohomcoend::{coend_comonoid, cohom, verify_adjunction};
use manin_kit::coreps::{coaction_tensor_check, corep_check, kappa_comonoid_check, tensor_corep, tensor_corep_associativity, tensor_corep_unit};
use manin_kit::exactlin::{Field, DEFAULT_BUDGET};
use manin_kit::fixture::Fixture;
use manin_kit::linrep::{count_reps_and_actions, pi_law_suite, FiniteMonoid, VecMonoid};
use manin_kit::posetcat::{check_downset_table, check_p_table, MaxPoset, SubsetCategory};
use manin_kit::quadalg::{coreflection_universal, white_relations_agree, QuadraticAlgebra};
use manin_kit::suites::{random_truncation, Corpus, ADJUNCTION_TRIPLES};
use manin_kit::translate::{lift_and_check, lift_rep, verify_lift_monoidality, Functor};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const POSET_N: usize = 8;
const POSET_LIMIT: Duration = Duration::from_secs(5);
const ADJUNCTION_LIMIT_PER_FIELD: Duration = Duration::from_secs(60);
const MIN_ADJUNCTION_TRIPLES: usize = 5;
const WHITE_TOP: usize = 4;
const COEND_TOP: usize = 3;
const CORE_TOP: usize = 2;
const MIN_COREFLECTION_PAIRS: usize = 20;
const PI_MAX_DIM: usize = 2;
const LIFT_TOP: usize = 3;
const FULL_RUN_DEGREE: &str = "3";
const FULL_RUN_LIMIT: Duration = Duration::from_secs(600);

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn corpus() -> Corpus {
    Corpus::load(&fixtures()).expect("shipped corpus loads")
}

fn fixture(name: &str) -> Fixture {
    Fixture::load(&fixtures().join(name)).expect("shipped fixture loads")
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn all_algebras(c: &Corpus) -> Vec<(String, QuadraticAlgebra)> {
    c.files.iter().flat_map(|(file, fx)| fx.algebras.iter().map(move |(n, a)| (format!("{file}/{n}"), a.clone()))).collect()
}

fn poset_tables() -> Verdict {
    let start = Instant::now();
    let p = check_p_table(&MaxPoset::new(POSET_N).map_err(|e| e.to_string())?).ok_or("no cohom table for the max poset")?;
    let c = check_downset_table(&SubsetCategory::new(POSET_N).map_err(|e| e.to_string())?).ok_or("no cohom table on downsets")?;
    let t = start.elapsed();
    ensure(p.pairs == 81 && p.passed(), || format!("max poset mismatches {:?}", p.mismatches))?;
    ensure(c.pairs == 81 && c.passed(), || format!("downset mismatches {:?}", c.mismatches))?;
    ensure(t < POSET_LIMIT, || format!("{t:?} over {POSET_LIMIT:?}"))?;
    Ok(format!("81 + 81 pairs exact in {t:.2?}"))
}

fn adjunction_oracle() -> Verdict {
    ensure(ADJUNCTION_TRIPLES.len() >= MIN_ADJUNCTION_TRIPLES, || "too few triples".into())?;
    let mut notes = Vec::new();
    for file in ["small_f2.alg", "small_f3.alg"] {
        let fx = fixture(file);
        let start = Instant::now();
        let mut morphisms = 0;
        for (a, b, z) in ADJUNCTION_TRIPLES {
            let get = |n: &str| fx.algebras.get(n).ok_or(format!("{file} lacks {n}"));
            let (a, b, z) = (get(a)?, get(b)?, get(z)?);
            ensure(a.gens() <= 2 && b.gens() <= 2 && z.gens() <= 2, || "generator count above 2".into())?;
            let r = verify_adjunction(a, b, z, 2, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{file}: {r:?}"))?;
            morphisms += r.lhs;
        }
        let t = start.elapsed();
        ensure(t < ADJUNCTION_LIMIT_PER_FIELD, || format!("{} took {t:?}", fx.field))?;
        notes.push(format!("{}: {} triples, {morphisms} morphisms, {t:.2?}", fx.field, ADJUNCTION_TRIPLES.len()));
    }
    Ok(notes.join("; "))
}

fn white_dims() -> Verdict {
    let c = corpus();
    let mut pairs = 0;
    for field in [Field::Rational, Field::prime(2).unwrap(), Field::prime(3).unwrap()] {
        let algs = c.algebras(field);
        for (na, a) in &algs {
            for (nb, b) in &algs {
                let w = a.white(b).map_err(|e| e.to_string())?.graded(WHITE_TOP).dims();
                let expect: Vec<usize> = a.graded(WHITE_TOP).dims().iter().zip(b.graded(WHITE_TOP).dims()).map(|(x, y)| x * y).collect();
                ensure(w == expect, || format!("{na} ∘ {nb}: {w:?} vs {expect:?}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs equal through degree {WHITE_TOP}"))
}

fn coend_comonoids() -> Verdict {
    let c = corpus();
    let algs = all_algebras(&c);
    for (name, b) in &algs {
        let co = coend_comonoid(b, COEND_TOP).map_err(|e| format!("{name}: {e}"))?;
        co.as_comonoid().check(COEND_TOP).map_err(|f| format!("{name}: {f}"))?;
    }
    for q in ["quantum_plane_q1", "quantum_plane_q2", "quantum_plane_q3"] {
        let a = c.algebra(Field::Rational, q).ok_or(format!("{q} missing"))?;
        let dims = cohom(&a, &a, 2).map_err(|e| e.to_string())?.graded().dims();
        ensure(dims == [1, 4, 13], || format!("cohom({q}, {q}) dims {dims:?}"))?;
    }
    Ok(format!("{} algebras through degree {COEND_TOP}; quantum planes q = 1, 2, 3 give 1, 4, 13", algs.len()))
}

fn kappa_and_tensor_coreps() -> Verdict {
    let c = corpus();
    let pick = |n: &str| c.algebra(Field::Rational, n).ok_or(format!("{n} missing"));
    let kappa_pairs =
        [("k_u", "quantum_plane_q2"), ("dual_numbers", "dual_numbers"), ("dual_numbers", "quantum_plane_q3"), ("quantum_plane_q1", "quantum_plane_q2")];
    for (a, b) in kappa_pairs {
        kappa_comonoid_check(&pick(a)?, &pick(b)?, CORE_TOP).map_err(|f| format!("κ {a}, {b}: {f}"))?;
    }
    let fx = fixture("z2_f3.fx");
    let bm = &fx.bimonoids.get("kz2").ok_or("kz2 missing")?.bimonoid;
    let x = Functor::TStar.bimonoid(bm, CORE_TOP).map_err(|e| e.to_string())?;
    let names = ["trivial", "sign", "regular"];
    let mut lifted = Vec::new();
    for n in names {
        let r = fx.reps.get(n).ok_or(format!("{n} missing"))?;
        lifted.push(lift_rep(Functor::TStar, &r.rho(), r.dim, CORE_TOP).map_err(|e| e.to_string())?);
    }
    let mut checks = 0;
    for i in 0..3 {
        tensor_corep_unit(&lifted[i], &x, CORE_TOP).map_err(|f| format!("unit {}: {f}", names[i]))?;
        for j in 0..3 {
            let t = tensor_corep(&lifted[i], &lifted[j], &x).map_err(|e| e.to_string())?;
            corep_check(&t, &x.comonoid, CORE_TOP).map_err(|f| format!("{} ⊗ {}: {f}", names[i], names[j]))?;
            coaction_tensor_check(&lifted[i], &lifted[j], &t, &x, CORE_TOP).map_err(|f| format!("coaction {} ⊗ {}: {f}", names[i], names[j]))?;
            for k in 0..3 {
                tensor_corep_associativity(&lifted[i], &lifted[j], &lifted[k], &x, CORE_TOP)
                    .map_err(|f| format!("associativity {} {} {}: {f}", names[i], names[j], names[k]))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{} κ pairs, {checks} associativity triples, coaction identity on 9 pairs, degree {CORE_TOP}", kappa_pairs.len()))
}

fn coreflection() -> Verdict {
    let c = corpus();
    let f2 = Field::prime(2).unwrap();
    let bs = c.algebras(f2);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut pairs = 0;
    for round in 0..4 {
        for (nb, b) in &bs {
            let t = random_truncation(f2, 1 + round % 2, 3, &mut rng);
            let r = coreflection_universal(b, &t, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{nb} round {round}: {r:?}"))?;
            pairs += 1;
        }
    }
    ensure(pairs >= MIN_COREFLECTION_PAIRS, || format!("only {pairs} pairs"))?;
    let mut phi = 0;
    for field in [Field::Rational, f2, Field::prime(3).unwrap()] {
        let algs = c.algebras(field);
        for (na, a) in &algs {
            for (nb, b) in &algs {
                ensure(white_relations_agree(a, b).map_err(|e| e.to_string())?, || format!("φ fails on {na}, {nb}"))?;
                phi += 1;
            }
        }
    }
    Ok(format!("{pairs} (B, T) pairs with unique lifts; φ relation spaces equal on {phi} pairs"))
}

fn pi_laws() -> Verdict {
    const LAWS: [&str; 7] = ["naturality", "c-compatibility", "associativity", "unit degeneration", "monoid morphism", "σ-compatibility", "unit-composition"];
    let mut total = 0;
    for f in [Field::Rational, Field::prime(3).unwrap()] {
        let results = pi_law_suite(f, PI_MAX_DIM);
        for law in LAWS {
            ensure(results.iter().any(|(n, _)| n.starts_with(law)), || format!("{law} missing"))?;
        }
        for (n, r) in &results {
            r.clone().map_err(|e| format!("{f} {n}: {e}"))?;
        }
        total += results.len();
    }
    let f2 = Field::prime(2).unwrap();
    let expected = [
        ("K[t]/(t²)", VecMonoid::dual_numbers(f2), [1, 4]),
        ("K×K", VecMonoid::diagonal(f2), [2, 8]),
        ("K[Z/2]", VecMonoid::monoid_algebra(f2, &FiniteMonoid::cyclic(2)), [1, 4]),
        ("K[{1,0}]", VecMonoid::monoid_algebra(f2, &FiniteMonoid::one_zero()), [2, 8]),
    ];
    for (name, x, counts) in &expected {
        for v in 1..=2 {
            let r = count_reps_and_actions(x, v, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(r.bijective && r.reps == r.actions && r.reps == counts[v - 1], || format!("{name} dim {v}: {r:?}"))?;
        }
    }
    Ok(format!("{total} law instances over Q and F_3; rep/action counts agree on {} F_2 monoids", expected.len()))
}

fn lifting() -> Verdict {
    let fx = fixture("algebras_q.fx");
    for n in ["nilpotent", "split"] {
        let r = fx.reps.get(n).ok_or(format!("{n} missing"))?;
        let x = fx.monoid_of(&r.over).ok_or("monoid missing")?;
        lift_and_check(Functor::TStar, x, &r.rho(), r.dim, LIFT_TOP).map_err(|f| format!("{n}: {f}"))?;
    }
    let z2 = fixture("z2_f3.fx");
    let bm = &z2.bimonoids.get("kz2").ok_or("kz2 missing")?.bimonoid;
    for (a, b) in [("sign", "sign"), ("regular", "regular")] {
        let (ra, rb) = (&z2.reps[a], &z2.reps[b]);
        verify_lift_monoidality(Functor::TStar, bm, &ra.rho(), ra.dim, &rb.rho(), rb.dim, LIFT_TOP).map_err(|f| format!("{a} ⊗ {b}: {f}"))?;
    }
    Ok(format!("T* lifts of nilpotent and split are coreps; monoidality for sign ⊗ sign and regular ⊗ regular, degree {LIFT_TOP}"))
}

fn full_run() -> Verdict {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_manin-kit"))
        .args(["suite", "--all", "--degree", FULL_RUN_DEGREE])
        .env_remove("MANINKIT_DEGREE")
        .env("MANINKIT_FIXTURES", fixtures())
        .output()
        .map_err(|e| e.to_string())?;
    let t = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let summary = text.lines().last().unwrap_or_default().to_string();
    ensure(out.status.code() == Some(0), || format!("exit {:?}: {summary}", out.status.code()))?;
    ensure(t < FULL_RUN_LIMIT, || format!("{t:?} over {FULL_RUN_LIMIT:?}"))?;
    Ok(format!("{summary} in {t:.1?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("poset cohom tables", poset_tables),
        ("adjunction oracle", adjunction_oracle),
        ("white-product dimensions", white_dims),
        ("coend comonoid", coend_comonoids),
        ("κ and tensor corepresentations", kappa_and_tensor_coreps),
        ("coreflection", coreflection),
        ("π laws and rep/action counts", pi_laws),
        ("lifting", lifting),
        ("full suite run", full_run),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(note) => println!("PASS criterion {} {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
