//! The registry of law suites run by `manin-kit suite`.
//!
//! Each suite checks one invariant over a list of cases drawn from the
//! fixture corpus or built in code. Cases run on the rayon pool and reports
//! come back sorted by `(suite, case)`, so output is reproducible.
//!
//! | suite | invariant |
//! |---|---|
//! | `poset.max-table` | searched cohom of `({0..n}, max)` equals `0 if x ≥ y else y` |
//! | `poset.downset-table` | searched cohom of subsets on downsets equals `{x+1..y}` |
//! | `poset.adjunction-counts` | `|Hom(cohom(V,W),Z)| = |Hom(W,Z⊗V)|` for all triples |
//! | `poset.differs` | the two cohoms differ exactly on pairs `0 < x < y` |
//! | `fincat.universal` | universal morphisms found by search satisfy the bijection |
//! | `fincat.restriction` | restricting a relative adjoint keeps it universal |
//! | `fincat.uniqueness` | searches with different tie-breaks differ by a unique iso |
//! | `fincat.absent` | a missing universal object makes the search return none |
//! | `fincat.fixtures` | fixture categories admit the expected adjoints |
//! | `quadalg.white-dims` | `dim (A∘B)_k = dim A_k · dim B_k` |
//! | `quadalg.dual-involution` | `(A^!)^! = A` |
//! | `quadalg.white-relations` | `G(A∘A′)` and `A∘A′` share degree-2 relations |
//! | `quadalg.coreflection` | the counit of `G` is universal with unique lifts |
//! | `cohom.adjunction` | `|Hom(cohom(A,B),Z)| = |Hom(B,Z∘A)|` and `ϑ`, `ϑ⁻¹` are inverse |
//! | `cohom.coend` | `coend(B)` is a comonoid |
//! | `cohom.kappa` | `κ` is a comonoid morphism |
//! | `coreps.identity` | the identity corepresentation and its coaction satisfy the laws |
//! | `coreps.tensor` | tensor products of corepresentations are associative and unital |
//! | `linrep.pi-laws` | the `π` laws as matrix identities |
//! | `linrep.rep-counts` | representations and actions correspond bijectively |
//! | `linrep.fixture-reps` | fixture representations satisfy the representation squares |
//! | `linrep.tensor-reps` | tensor products of representations of bimonoids are representations |
//! | `linrep.hom-universality` | `hom` of semi-linear sets is universal |
//! | `translate.phi` | `Φ` is a comonoid morphism; per-degree iso report |
//! | `translate.phi-naturality` | `Φ` is natural on seeded random matrices |
//! | `translate.phi-sigma` | `φ` commutes with `σ^{(23)}` |
//! | `translate.lift` | lifted representations are corepresentations |
//! | `translate.monoidality` | lifting is monoidal up to `φ` |

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cohomcoend::{coend_comonoid, verify_adjunction};
use crate::coreps::{
    coaction_check, coaction_tensor_check, corep_check, kappa_comonoid_check, tensor_corep, tensor_corep_associativity, tensor_corep_unit, Corepresentation,
};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::fincat::{
    relative_adjunction_with_parameter, relative_left_adjoint, uniqueness_iso, universal_from_functor_to_object, verify_cohom_bifunctor,
    verify_relative_adjoint, Category, IdentityFunctor, TensorRight, TieBreak,
};
use crate::fixture::{CategoryDef, Fixture, FixtureError};
use crate::laws::LawResult;
use crate::linrep::{
    count_reps_and_actions, hom_universality, monoid_rep_bridge, pi_law_suite, rep_check, tensor_rep, unit_rep, FiniteMonoid, SemiLinearSet, VecBimonoid,
    VecMonoid,
};
use crate::posetcat::{
    check_adjunction_counts, check_downset_table, check_p_table, searched_p_table, union_family, verify_subcategory_cohom_differs, MaxPoset, SubsetCategory,
};
use crate::quadalg::{coreflection_universal, white_relations_agree, GradedAlgebra, Presented, QuadraticAlgebra};
use crate::report::{LawReport, Status};
use crate::translate::{lift_and_check, phi_comonoid_check, phi_naturality_check, phi_sigma_check, phi_transform, verify_lift_monoidality, Functor};

/// Highest degree any suite checks.
pub const MAX_DEGREE: usize = 6;
/// Default truncation degree.
pub const DEFAULT_DEGREE: usize = 4;

/// Settings shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub degree: usize,
    pub seed: u64,
    pub budget: u64,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig { degree: DEFAULT_DEGREE, seed: 0, budget: crate::exactlin::DEFAULT_BUDGET }
    }
}

/// Every fixture file of a directory, by file name.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub dir: PathBuf,
    pub files: Vec<(String, Fixture)>,
}

impl Corpus {
    /// Loads `*.alg`, `*.fx` and `*.cat` files in name order.
    pub fn load(dir: &Path) -> Result<Corpus, FixtureError> {
        let rd = std::fs::read_dir(dir).map_err(|e| FixtureError::Io(dir.display().to_string(), e.to_string()))?;
        let mut paths: Vec<PathBuf> =
            rd.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("alg" | "fx" | "cat"))).collect();
        paths.sort();
        let mut files = Vec::new();
        for p in paths {
            let name = p.file_name().and_then(|n| n.to_str()).unwrap_or_default().to_string();
            files.push((name, Fixture::load(&p)?));
        }
        Ok(Corpus { dir: dir.to_path_buf(), files })
    }

    /// Algebras over `field`, keyed `file/name`.
    pub fn algebras(&self, field: Field) -> Vec<(String, QuadraticAlgebra)> {
        let mut out = Vec::new();
        for (file, fx) in &self.files {
            if fx.field == field {
                for (name, a) in &fx.algebras {
                    out.push((if fx.algebras.len() == 1 { name.clone() } else { format!("{file}/{name}") }, a.clone()));
                }
            }
        }
        out
    }

    /// The algebra called `name` over `field`.
    pub fn algebra(&self, field: Field, name: &str) -> Option<QuadraticAlgebra> {
        self.files.iter().filter(|(_, fx)| fx.field == field).find_map(|(_, fx)| fx.algebras.get(name).cloned())
    }

    /// The fixture holding a section called `name`.
    pub fn fixture_with(&self, name: &str) -> Option<&Fixture> {
        self.files
            .iter()
            .map(|(_, fx)| fx)
            .find(|fx| fx.reps.contains_key(name) || fx.monoids.contains_key(name) || fx.bimonoids.contains_key(name) || fx.categories.contains_key(name))
    }
}

/// What a case reports back.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub note: Option<String>,
}

impl Outcome {
    pub fn pass() -> Outcome {
        Outcome { status: Status::Pass, note: None }
    }

    pub fn fail(why: impl Into<String>) -> Outcome {
        Outcome { status: Status::Fail(why.into()), note: None }
    }

    pub fn error(why: impl Into<String>) -> Outcome {
        Outcome { status: Status::Error(why.into()), note: None }
    }

    pub fn check(ok: bool, why: impl Into<String>) -> Outcome {
        if ok {
            Outcome::pass()
        } else {
            Outcome::fail(why)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Outcome {
        self.note = Some(note.into());
        self
    }
}

impl From<LawResult> for Outcome {
    fn from(r: LawResult) -> Outcome {
        match r {
            Ok(()) => Outcome::pass(),
            Err(f) => Outcome { status: f.into(), note: None },
        }
    }
}

type Job = Arc<dyn Fn() -> Outcome + Send + Sync>;

/// One case of a suite.
#[derive(Clone)]
pub struct Case {
    pub id: String,
    pub degree: usize,
    run: Job,
}

impl Case {
    pub fn new(id: impl Into<String>, degree: usize, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Case {
        Case { id: id.into(), degree, run: Arc::new(run) }
    }

    pub fn run(&self) -> Outcome {
        (self.run)()
    }
}

/// A named suite and the invariant it checks.
pub struct Suite {
    pub name: &'static str,
    pub invariant: &'static str,
    pub cases: fn(&Corpus, &SuiteConfig) -> Vec<Case>,
}

/// All suites in registry order.
pub fn registry() -> Vec<Suite> {
    macro_rules! suite {
        ($name:expr, $inv:expr, $f:ident) => {
            Suite { name: $name, invariant: $inv, cases: $f }
        };
    }
    vec![
        suite!("poset.max-table", "searched cohom of ({0..n}, max) equals 0 if x ≥ y else y", poset_max_table),
        suite!("poset.downset-table", "searched cohom of subsets on downsets equals {x+1..y}", poset_downset_table),
        suite!("poset.adjunction-counts", "|Hom(cohom(V,W),Z)| = |Hom(W,Z⊗V)| for all triples", poset_adjunction_counts),
        suite!("poset.differs", "the two cohoms differ exactly on pairs 0 < x < y", poset_differs),
        suite!("fincat.universal", "universal morphisms found by search satisfy the bijection", fincat_universal),
        suite!("fincat.restriction", "restricting a relative adjoint keeps it universal", fincat_restriction),
        suite!("fincat.uniqueness", "searches with different tie-breaks differ by a unique iso", fincat_uniqueness),
        suite!("fincat.absent", "a missing universal object makes the search return none", fincat_absent),
        suite!("fincat.fixtures", "fixture categories admit the expected adjoints", fincat_fixtures),
        suite!("quadalg.white-dims", "dim (A∘B)_k = dim A_k · dim B_k", quadalg_white_dims),
        suite!("quadalg.dual-involution", "(A^!)^! = A", quadalg_dual_involution),
        suite!("quadalg.white-relations", "G(A∘A′) and A∘A′ share degree-2 relations", quadalg_white_relations),
        suite!("quadalg.coreflection", "the counit of G is universal with unique lifts", quadalg_coreflection),
        suite!("cohom.adjunction", "|Hom(cohom(A,B),Z)| = |Hom(B,Z∘A)| and ϑ, ϑ⁻¹ are inverse", cohom_adjunction),
        suite!("cohom.coend", "coend(B) is a comonoid", cohom_coend),
        suite!("cohom.kappa", "κ is a comonoid morphism", cohom_kappa),
        suite!("coreps.identity", "the identity corepresentation and its coaction satisfy the laws", coreps_identity),
        suite!("coreps.tensor", "tensor products of corepresentations are associative and unital", coreps_tensor),
        suite!("linrep.pi-laws", "the π laws as matrix identities", linrep_pi_laws),
        suite!("linrep.rep-counts", "representations and actions correspond bijectively", linrep_rep_counts),
        suite!("linrep.fixture-reps", "fixture representations satisfy the representation squares", linrep_fixture_reps),
        suite!("linrep.tensor-reps", "tensor products of representations of bimonoids are representations", linrep_tensor_reps),
        suite!("linrep.hom-universality", "hom of semi-linear sets is universal", linrep_hom_universality),
        suite!("translate.phi", "Φ is a comonoid morphism; per-degree iso report", translate_phi),
        suite!("translate.phi-naturality", "Φ is natural on seeded random matrices", translate_phi_naturality),
        suite!("translate.phi-sigma", "φ commutes with σ^(23)", translate_phi_sigma),
        suite!("translate.lift", "lifted representations are corepresentations", translate_lift),
        suite!("translate.monoidality", "lifting is monoidal up to φ", translate_monoidality),
    ]
}

/// Runs every case of the given suites in parallel; reports are sorted by
/// `(suite, case)`.
pub fn run_suites(suites: &[&Suite], corpus: &Corpus, cfg: &SuiteConfig) -> Vec<LawReport> {
    let jobs: Vec<(&'static str, Case)> = suites.iter().flat_map(|s| (s.cases)(corpus, cfg).into_iter().map(move |c| (s.name, c))).collect();
    let mut reports: Vec<LawReport> = jobs
        .par_iter()
        .map(|(suite, case)| {
            let start = Instant::now();
            let out = case.run();
            LawReport { suite: suite.to_string(), case: case.id.clone(), status: out.status, degree: case.degree, note: out.note, elapsed: start.elapsed() }
        })
        .collect();
    reports.sort_by(|a, b| (&a.suite, &a.case).cmp(&(&b.suite, &b.case)));
    reports
}

fn f2() -> Field {
    Field::Prime(2)
}

fn f3() -> Field {
    Field::Prime(3)
}

// --- posets -----------------------------------------------------------------

fn poset_max_table(_: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    [1, 4, 8]
        .into_iter()
        .map(|n| {
            Case::new(format!("n={n}"), 0, move || match MaxPoset::new(n).ok().and_then(|p| check_p_table(&p)) {
                Some(c) => Outcome::check(c.passed(), format!("mismatches at {:?}", c.mismatches)).with_note(format!("{} pairs", c.pairs)),
                None => Outcome::fail("search found no cohom table"),
            })
        })
        .collect()
}

fn poset_downset_table(_: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    [1, 3, 8]
        .into_iter()
        .map(|n| {
            Case::new(format!("n={n}"), 0, move || match SubsetCategory::new(n).ok().and_then(|c| check_downset_table(&c)) {
                Some(c) => Outcome::check(c.passed(), format!("mismatches at {:?}", c.mismatches)).with_note(format!("{} pairs", c.pairs)),
                None => Outcome::fail("search found no cohom table"),
            })
        })
        .collect()
}

fn poset_adjunction_counts(_: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    vec![
        Case::new("max n=8", 0, || {
            let p = MaxPoset::new(8).expect("valid poset");
            let Some(t) = searched_p_table(&p) else { return Outcome::fail("no table") };
            match check_adjunction_counts(&p.cat, &t) {
                Ok(k) => Outcome::pass().with_note(format!("{k} triples")),
                Err(w) => Outcome::fail(format!("counts differ at (V,W,Z) = {w:?}")),
            }
        }),
        Case::new("subsets n=8", 0, || {
            let c = SubsetCategory::new(8).expect("valid category");
            let Some(t) = crate::posetcat::searched_downset_table(&c) else { return Outcome::fail("no table") };
            match check_adjunction_counts(&c.cat, &t) {
                Ok(k) => Outcome::pass().with_note(format!("{k} triples")),
                Err(w) => Outcome::fail(format!("counts differ at (V,W,Z) = {w:?}")),
            }
        }),
    ]
}

fn poset_differs(_: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    [1, 3, 8]
        .into_iter()
        .map(|n| {
            Case::new(format!("n={n}"), 0, move || {
                let r = match verify_subcategory_cohom_differs(n) {
                    Ok(r) => r,
                    Err(e) => return Outcome::error(e.to_string()),
                };
                let shape_ok = r.witnesses.iter().all(|&(x, y, _, _)| 0 < x && x < y);
                let want = n * n.saturating_sub(1) / 2;
                Outcome::check(shape_ok && r.witnesses.len() == want, format!("{} witnesses, expected {want}", r.witnesses.len()))
                    .with_note(format!("{} witnesses", r.witnesses.len()))
            })
        })
        .collect()
}

// --- finite categories ------------------------------------------------------

fn fincat_universal(_: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    let max4 = || MaxPoset::new(4).expect("valid poset").cat;
    vec![
        Case::new("max4 (−⊗2) to 3", 0, move || {
            let c = max4();
            let g = TensorRight { cat: &c, v: 2 };
            let got = universal_from_functor_to_object(&c, &c, &g, 3, TieBreak::Ascending);
            Outcome::check(got == Some((3, (3, 3))), format!("got {got:?}"))
        }),
        Case::new("max4 (−⊗2) to 1", 0, move || {
            let c = max4();
            let g = TensorRight { cat: &c, v: 2 };
            let got = universal_from_functor_to_object(&c, &c, &g, 1, TieBreak::Ascending);
            Outcome::check(got.is_none(), format!("got {got:?}"))
        }),
        Case::new("max4 identity", 0, move || {
            let c = max4();
            let all: Vec<usize> = (0..c.objects()).collect();
            match relative_left_adjoint(&c, &c, &IdentityFunctor, &all, TieBreak::Ascending) {
                Some(adj) => {
                    let ids = adj.objects == all && adj.unit.iter().enumerate().all(|(x, e)| *e == c.id(x));
                    match verify_relative_adjoint(&c, &c, &IdentityFunctor, &adj) {
                        Ok(()) => Outcome::check(ids, "identity adjoint is not the identity"),
                        Err(e) => Outcome::fail(e),
                    }
                }
                None => Outcome::fail("no adjoint"),
            }
        }),
        Case::new("subsets n=3 (−∪D_1)", 0, || {
            let c = SubsetCategory::new(3).expect("valid category").cat;
            let g = TensorRight { cat: &c, v: SubsetCategory::downset(1) };
            let all: Vec<usize> = (0..c.objects()).collect();
            match relative_left_adjoint(&c, &c, &g, &all, TieBreak::Ascending) {
                Some(adj) => {
                    let formula = adj.objects.iter().enumerate().all(|(w, &p)| p == w & !SubsetCategory::downset(1));
                    match verify_relative_adjoint(&c, &c, &g, &adj) {
                        Ok(()) => Outcome::check(formula, "adjoint differs from W ∖ D_1"),
                        Err(e) => Outcome::fail(e),
                    }
                }
                None => Outcome::fail("no adjoint"),
            }
        }),
    ]
}

fn fincat_restriction(_: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    vec![Case::new("subsets n=4 downsets to evens", 0, || {
        let c = SubsetCategory::new(4).expect("valid category");
        let full = c.downsets();
        let small: Vec<usize> = full.iter().copied().step_by(2).collect();
        let (Some(big), Some(sub)) =
            (relative_adjunction_with_parameter(&c.cat, &full, TieBreak::Ascending), relative_adjunction_with_parameter(&c.cat, &small, TieBreak::Ascending))
        else {
            return Outcome::fail("search failed");
        };
        for &v in &small {
            for &w in &small {
                if big.get(v, w) != sub.get(v, w) {
                    return Outcome::fail(format!("entries differ at ({v}, {w})"));
                }
            }
        }
        match verify_cohom_bifunctor(&c.cat, &sub) {
            Ok(()) => Outcome::pass(),
            Err(e) => Outcome::fail(e),
        }
    })]
}

fn fincat_uniqueness(corpus: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    let chain = corpus.fixture_with("chain").and_then(|fx| match fx.categories.get("chain") {
        Some(CategoryDef::Preorder(c)) => Some(c.clone()),
        _ => None,
    });
    vec![
        Case::new("chain fixture tie-breaks", 0, move || {
            let Some(c) = chain.clone() else { return Outcome::error("categories.cat has no preorder `chain`") };
            let all: Vec<usize> = (0..c.objects()).collect();
            let a1 = relative_left_adjoint(&c, &c, &IdentityFunctor, &all, TieBreak::Ascending);
            let a2 = relative_left_adjoint(&c, &c, &IdentityFunctor, &all, TieBreak::Descending);
            let (Some(a1), Some(a2)) = (a1, a2) else { return Outcome::fail("no adjoint") };
            match uniqueness_iso(&c, &c, &IdentityFunctor, &a1, &a2) {
                Ok(iso) => {
                    let non_identity = iso.iter().filter(|(s, t)| s != t).count();
                    Outcome::check(non_identity > 0 && a1 != a2, "tie-breaks should pick different objects")
                        .with_note(format!("{non_identity} non-identity components"))
                }
                Err(e) => Outcome::fail(e.to_string()),
            }
        }),
        Case::new("max8 canonical", 0, || {
            let c = MaxPoset::new(8).expect("valid poset").cat;
            let g = TensorRight { cat: &c, v: 3 };
            let all: Vec<usize> = (0..c.objects()).collect();
            let a1 = relative_left_adjoint(&c, &c, &g, &all, TieBreak::Ascending);
            let a2 = relative_left_adjoint(&c, &c, &g, &all, TieBreak::Descending);
            let (Some(a1), Some(a2)) = (a1, a2) else { return Outcome::fail("no adjoint") };
            match uniqueness_iso(&c, &c, &g, &a1, &a2) {
                Ok(iso) => Outcome::check(iso.iter().all(|(s, t)| s == t), "expected the identity"),
                Err(e) => Outcome::fail(e.to_string()),
            }
        }),
    ]
}

fn fincat_absent(_: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    vec![Case::new("subsets of {1,2,3} without {3}", 0, || {
        let masks = [0b000, 0b001, 0b010, 0b011, 0b101, 0b110, 0b111];
        let fam = match union_family(&masks) {
            Ok(f) => f,
            Err(e) => return Outcome::error(e.to_string()),
        };
        let all: Vec<usize> = (0..masks.len()).collect();
        let none = relative_adjunction_with_parameter(&fam, &all, TieBreak::Ascending).is_none();
        let full = SubsetCategory::new(3).expect("valid category");
        let some = relative_adjunction_with_parameter(&full.cat, &(0..8).collect::<Vec<_>>(), TieBreak::Ascending).is_some();
        Outcome::check(none && some, "deleting {3} should remove exactly the needed cohom")
    })]
}

fn fincat_fixtures(corpus: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    let mut cases = Vec::new();
    for (file, fx) in &corpus.files {
        for (name, def) in &fx.categories {
            let def = def.clone();
            cases.push(Case::new(format!("{file}/{name}"), 0, move || match &def {
                CategoryDef::Explicit(c) => {
                    let all: Vec<usize> = (0..c.objects()).collect();
                    match relative_left_adjoint(c, c, &IdentityFunctor, &all, TieBreak::Ascending) {
                        Some(adj) => verify_relative_adjoint(c, c, &IdentityFunctor, &adj).map_or_else(Outcome::fail, |()| Outcome::pass()),
                        None => Outcome::fail("identity functor has no left adjoint"),
                    }
                }
                CategoryDef::Preorder(c) => {
                    let all: Vec<usize> = (0..c.objects()).collect();
                    let Some(adj) = relative_left_adjoint(c, c, &IdentityFunctor, &all, TieBreak::Ascending) else {
                        return Outcome::fail("identity functor has no left adjoint");
                    };
                    if let Err(e) = verify_relative_adjoint(c, c, &IdentityFunctor, &adj) {
                        return Outcome::fail(e);
                    }
                    if !c.has_tensor() {
                        return Outcome::pass();
                    }
                    let Some(t) = relative_adjunction_with_parameter(c, &all, TieBreak::Ascending) else {
                        return Outcome::pass().with_note("not coclosed");
                    };
                    if let Err(e) = verify_cohom_bifunctor(c, &t) {
                        return Outcome::fail(e);
                    }
                    match check_adjunction_counts(c, &t) {
                        Ok(k) => Outcome::pass().with_note(format!("coclosed, {k} triples")),
                        Err(w) => Outcome::fail(format!("counts differ at {w:?}")),
                    }
                }
            }));
        }
    }
    cases
}

// --- quadratic algebras -----------------------------------------------------

fn quadalg_white_dims(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let d = cfg.degree.min(4);
    let algs = corpus.algebras(Field::Rational);
    let mut cases = Vec::new();
    for (na, a) in &algs {
        for (nb, b) in &algs {
            let (a, b) = (a.clone(), b.clone());
            cases.push(Case::new(format!("{na} ∘ {nb}"), d, move || {
                let w = match a.white(&b) {
                    Ok(w) => w,
                    Err(e) => return Outcome::error(e.to_string()),
                };
                let got = w.graded(d).dims();
                let (da, db) = (a.graded(d).dims(), b.graded(d).dims());
                let want: Vec<usize> = da.iter().zip(&db).map(|(x, y)| x * y).collect();
                Outcome::check(got == want, format!("dims {got:?}, expected {want:?}")).with_note(format!("dims {got:?}"))
            }));
        }
    }
    cases
}

/// Every algebra of the corpus, over `Q`, `F_2` and `F_3`.
fn all_algebras(corpus: &Corpus) -> Vec<(String, QuadraticAlgebra)> {
    [Field::Rational, f2(), f3()].into_iter().flat_map(|f| corpus.algebras(f)).collect()
}

fn quadalg_dual_involution(corpus: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    all_algebras(corpus)
        .into_iter()
        .map(|(name, a)| {
            Case::new(name, 2, move || {
                let dd = a.dual().dual();
                Outcome::check(dd.relations() == a.relations(), "double dual has different relations")
            })
        })
        .collect()
}

fn quadalg_white_relations(corpus: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    let algs = corpus.algebras(Field::Rational);
    let mut cases = Vec::new();
    for (na, a) in &algs {
        for (nb, b) in &algs {
            let (a, b) = (a.clone(), b.clone());
            cases.push(Case::new(format!("{na} ∘ {nb}"), 2, move || match white_relations_agree(&a, &b) {
                Ok(ok) => Outcome::check(ok, "relation spaces differ"),
                Err(e) => Outcome::error(e.to_string()),
            }));
        }
    }
    cases
}

/// A seeded graded algebra `T(V)/(random quadratic and cubic elements)`.
pub fn random_truncation(field: Field, gens: usize, top: usize, rng: &mut ChaCha8Rng) -> GradedAlgebra {
    let elems = field.elements().expect("finite field");
    let mut ideal = Vec::new();
    for d in [2usize, 3] {
        for _ in 0..rng.gen_range(0..3) {
            let v: Vec<Scalar> = (0..gens.pow(d as u32)).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
            ideal.push((d, v));
        }
    }
    let p = Presented::new(field, QuadraticAlgebra::default_labels("t", gens), &ideal, top).expect("ideal vectors have the right length");
    GradedAlgebra::Presented(Arc::new(p))
}

fn quadalg_coreflection(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let top = cfg.degree.clamp(2, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ts: Vec<GradedAlgebra> = (0..4).map(|i| random_truncation(f2(), 1 + i % 2, top, &mut rng)).collect();
    let budget = cfg.budget;
    let mut cases = Vec::new();
    for (nb, b) in corpus.algebras(f2()) {
        for (i, t) in ts.iter().enumerate() {
            let (b, t) = (b.clone(), t.clone());
            cases.push(Case::new(format!("{nb} → T{i}"), top, move || match coreflection_universal(&b, &t, budget) {
                Ok(r) => Outcome::check(r.passed(), format!("{r:?}")).with_note(format!("{} morphisms, all with unique lifts", r.morphisms)),
                Err(crate::quadalg::AlgError::Budget(e)) => Outcome { status: e.into(), note: None },
                Err(e) => Outcome::error(e.to_string()),
            }));
        }
    }
    cases
}

// --- internal cohom ---------------------------------------------------------

/// `(A, B, Z)` triples checked by `cohom.adjunction`, per field.
pub const ADJUNCTION_TRIPLES: [(&str, &str, &str); 6] = [
    ("free_2", "free_2", "dual_numbers"),
    ("poly_2", "poly_2", "poly_2"),
    ("dual_numbers", "poly_2", "k_u"),
    ("poly_2", "dual_numbers", "free_2"),
    ("free_2", "k_u", "poly_2"),
    ("k_u", "free_2", "dual_numbers"),
];

fn cohom_adjunction(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let mut cases = Vec::new();
    for field in [f2(), f3()] {
        for (a, b, z) in ADJUNCTION_TRIPLES {
            let algs = (corpus.algebra(field, a), corpus.algebra(field, b), corpus.algebra(field, z));
            let budget = cfg.budget;
            cases.push(Case::new(format!("{field} ({a}, {b}, {z})"), 2, move || {
                let (Some(a), Some(b), Some(z)) = algs.clone() else { return Outcome::error("algebra missing from the corpus") };
                match verify_adjunction(&a, &b, &z, 2, budget) {
                    Ok(r) => Outcome::check(r.passed(), format!("{r:?}")).with_note(format!("{} = {} morphisms", r.lhs, r.rhs)),
                    Err(crate::quadalg::AlgError::Budget(e)) => Outcome { status: e.into(), note: None },
                    Err(e) => Outcome::error(e.to_string()),
                }
            }));
        }
    }
    cases
}

fn cohom_coend(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let top = cfg.degree.min(3);
    all_algebras(corpus)
        .into_iter()
        .map(|(name, b)| {
            Case::new(name, top, move || match coend_comonoid(&b, top) {
                Ok(c) => Outcome::from(c.as_comonoid().check(top)).with_note(format!("dims {:?}", c.graded().dims())),
                Err(e) => Outcome::error(e.to_string()),
            })
        })
        .collect()
}

fn cohom_kappa(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let pick = |n: &str| corpus.algebra(Field::Rational, n);
    // Two four-generator factors reach 4096-dimensional degree-3 pieces, so
    // that pair stops at degree 2.
    let pairs = [
        ("k_u", "quantum_plane_q2", 3),
        ("dual_numbers", "dual_numbers", 3),
        ("dual_numbers", "quantum_plane_q3", 3),
        ("quantum_plane_q1", "quantum_plane_q2", 2),
    ];
    pairs
        .into_iter()
        .map(|(a, b, cap)| {
            let top = cfg.degree.min(cap);
            let (va, vb) = (pick(a), pick(b));
            Case::new(format!("{a} ∘ {b}"), top, move || match (&va, &vb) {
                (Some(x), Some(y)) => kappa_comonoid_check(x, y, top).into(),
                _ => Outcome::error("algebra missing from the corpus"),
            })
        })
        .collect()
}

// --- corepresentations ------------------------------------------------------

fn coreps_identity(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let top = cfg.degree.min(3);
    corpus
        .algebras(Field::Rational)
        .into_iter()
        .map(|(name, b)| {
            Case::new(name, top, move || {
                let (rep, comonoid) = match Corepresentation::identity(&b, top) {
                    Ok(x) => x,
                    Err(e) => return Outcome::error(e.to_string()),
                };
                if let Err(f) = corep_check(&rep, &comonoid, top) {
                    return Outcome { status: f.into(), note: None };
                }
                match rep.coaction() {
                    Ok(d) => coaction_check(&d, &comonoid, &b, top).into(),
                    Err(e) => Outcome::error(e.to_string()),
                }
            })
        })
        .collect()
}

/// A representation with its name and dimension.
type NamedRep = (String, Matrix, usize);

/// `K[Z/2]` over `F_3` and its trivial, sign and regular representations.
fn z2_reps(corpus: &Corpus) -> Option<(VecBimonoid, Vec<NamedRep>)> {
    let fx = corpus.fixture_with("kz2")?;
    let b = fx.bimonoids.get("kz2")?.bimonoid.clone();
    let reps = ["trivial", "sign", "regular"].iter().map(|n| fx.reps.get(*n).map(|r| (n.to_string(), r.rho(), r.dim))).collect::<Option<Vec<_>>>()?;
    Some((b, reps))
}

fn coreps_tensor(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let Some((b, reps)) = z2_reps(corpus) else {
        return vec![Case::new("kz2", 0, || Outcome::error("z2_f3.fx is missing kz2 or its representations"))];
    };
    let mut cases = Vec::new();
    let top = cfg.degree.min(3);
    for (i, j, k) in [(1, 1, 0), (1, 2, 1), (2, 2, 2)] {
        let (b, reps) = (b.clone(), reps.clone());
        let id = format!("associativity ({}, {}, {})", reps[i].0, reps[j].0, reps[k].0);
        cases.push(Case::new(id, top, move || {
            let lifted = (|| -> Result<_, crate::quadalg::AlgError> {
                let x = Functor::TStar.bimonoid(&b, top)?;
                let l = |r: &NamedRep| crate::translate::lift_rep(Functor::TStar, &r.1, r.2, top);
                Ok((x, l(&reps[i])?, l(&reps[j])?, l(&reps[k])?))
            })();
            match lifted {
                Ok((x, a, bb, c)) => tensor_corep_associativity(&a, &bb, &c, &x, top).into(),
                Err(e) => Outcome::error(e.to_string()),
            }
        }));
    }
    for r in 0..reps.len() {
        let (b, reps) = (b.clone(), reps.clone());
        cases.push(Case::new(format!("unit ({})", reps[r].0), top, move || {
            let built = Functor::TStar.bimonoid(&b, top).and_then(|x| Ok((crate::translate::lift_rep(Functor::TStar, &reps[r].1, reps[r].2, top)?, x)));
            match built {
                Ok((a, x)) => tensor_corep_unit(&a, &x, top).into(),
                Err(e) => Outcome::error(e.to_string()),
            }
        }));
    }
    for (i, j) in [(1, 1), (1, 2), (2, 1)] {
        let (b, reps) = (b.clone(), reps.clone());
        cases.push(Case::new(format!("coaction ({}, {})", reps[i].0, reps[j].0), top, move || {
            let built = (|| -> Result<_, crate::quadalg::AlgError> {
                let x = Functor::TStar.bimonoid(&b, top)?;
                let a = crate::translate::lift_rep(Functor::TStar, &reps[i].1, reps[i].2, top)?;
                let c = crate::translate::lift_rep(Functor::TStar, &reps[j].1, reps[j].2, top)?;
                let t = tensor_corep(&a, &c, &x)?;
                Ok((x, a, c, t))
            })();
            match built {
                Ok((x, a, c, t)) => {
                    if let Err(f) = corep_check(&t, &x.comonoid, top) {
                        return Outcome { status: f.into(), note: None };
                    }
                    coaction_tensor_check(&a, &c, &t, &x, top).into()
                }
                Err(e) => Outcome::error(e.to_string()),
            }
        }));
    }
    cases
}

// --- linear representations -------------------------------------------------

fn linrep_pi_laws(_: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    let families = [
        "defining diagram",
        "σ-compatibility",
        "c associativity",
        "naturality",
        "c-compatibility",
        "associativity",
        "unit degeneration",
        "monoid morphism",
        "unit-composition",
    ];
    let mut cases = Vec::new();
    for field in [Field::Rational, f3()] {
        for fam in families {
            cases.push(Case::new(format!("{field} {fam}"), 0, move || {
                let prefix = format!("{fam} (");
                let laws: Vec<(String, LawResult)> = pi_law_suite(field, 2).into_iter().filter(|(n, _)| n.starts_with(&prefix)).collect();
                if laws.is_empty() {
                    return Outcome::error("no laws in this family");
                }
                match laws.iter().find(|(_, r)| r.is_err()) {
                    Some((n, Err(f))) => Outcome::fail(format!("{n}: {f}")),
                    _ => Outcome::pass().with_note(format!("{} instances", laws.len())),
                }
            }));
        }
    }
    cases
}

type MonoidCtor = fn(Field) -> VecMonoid;

fn linrep_rep_counts(_: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let budget = cfg.budget;
    let mut cases = Vec::new();
    let monoids: [(&str, MonoidCtor); 4] = [
        ("dual numbers", VecMonoid::dual_numbers),
        ("K×K", VecMonoid::diagonal),
        ("K[Z/2]", |f| VecMonoid::monoid_algebra(f, &FiniteMonoid::cyclic(2))),
        ("K[{1,0}]", |f| VecMonoid::monoid_algebra(f, &FiniteMonoid::one_zero())),
    ];
    for (name, make) in monoids {
        for v in 1..=2 {
            cases.push(Case::new(format!("F2 {name} dim {v}"), 0, move || match count_reps_and_actions(&make(f2()), v, budget) {
                Ok(c) => Outcome::check(c.bijective && c.reps == c.actions, format!("{c:?}")).with_note(format!("{} reps, {} actions", c.reps, c.actions)),
                Err(e) => Outcome { status: e.into(), note: None },
            }));
        }
    }
    cases
}

fn linrep_fixture_reps(corpus: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    let mut cases = Vec::new();
    for (file, fx) in &corpus.files {
        for (name, r) in &fx.reps {
            let monoid = fx.monoid_of(&r.over).cloned();
            let finite = fx.bimonoids.get(&r.over).and_then(|b| b.finite.clone()).or_else(|| fx.monoids.get(&r.over).and_then(|m| m.finite.clone()));
            let r = r.clone();
            cases.push(Case::new(format!("{file}/{name}"), 0, move || {
                let Some(x) = &monoid else { return Outcome::error("unknown monoid") };
                if let Err(f) = rep_check(&r.rho(), x, r.dim) {
                    return Outcome { status: f.into(), note: None };
                }
                if let Some(m) = &finite {
                    let (a, b) = monoid_rep_bridge(m, &r.actions);
                    if let Err(f) = a.and(b) {
                        return Outcome { status: f.into(), note: None };
                    }
                }
                Outcome::pass()
            }));
        }
    }
    cases
}

fn linrep_tensor_reps(corpus: &Corpus, _: &SuiteConfig) -> Vec<Case> {
    let mut cases = Vec::new();
    for (file, fx) in &corpus.files {
        for (bname, bd) in &fx.bimonoids {
            let b = bd.bimonoid.clone();
            cases.push(Case::new(format!("{file}/{bname} bimonoid"), 0, {
                let b = b.clone();
                move || b.check().into()
            }));
            cases.push(Case::new(format!("{file}/{bname} unit rep"), 0, {
                let b = b.clone();
                move || rep_check(&unit_rep(&b), &b.monoid, 1).into()
            }));
            let reps: Vec<_> = fx.reps.iter().filter(|(_, r)| &r.over == bname).map(|(n, r)| (n.clone(), r.clone())).collect();
            for (n1, r1) in &reps {
                for (n2, r2) in &reps {
                    let (b, r1, r2) = (b.clone(), r1.clone(), r2.clone());
                    cases.push(Case::new(format!("{file}/{n1} ⊗ {n2}"), 0, move || {
                        let t = tensor_rep(&r1.rho(), r1.dim, &r2.rho(), r2.dim, &b);
                        rep_check(&t, &b.monoid, r1.dim * r2.dim).into()
                    }));
                }
            }
        }
    }
    cases
}

fn linrep_hom_universality(_: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let budget = cfg.budget;
    let shapes = [((1, 1), (1, 1), (1, 1)), ((2, 1), (1, 1), (1, 1)), ((1, 1), (2, 1), (1, 1)), ((1, 1), (1, 1), (3, 1)), ((1, 1), (1, 2), (1, 1))];
    shapes
        .into_iter()
        .map(|(z, a, b)| {
            Case::new(format!("F2 Z={z:?} A={a:?} B={b:?}"), 0, move || {
                let s = |(p, d): (usize, usize)| SemiLinearSet::new(f2(), p, d);
                match hom_universality(&s(z), &s(a), &s(b), budget) {
                    Ok(h) => Outcome::check(h.is_bijection(), format!("{h:?}")).with_note(format!("{} maps", h.candidates)),
                    Err(e) => Outcome { status: e.into(), note: None },
                }
            })
        })
        .collect()
}

// --- translation ------------------------------------------------------------

fn translate_phi(_: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let top = cfg.degree.min(3);
    let mut cases = Vec::new();
    for functor in [Functor::TStar, Functor::SStar] {
        for v in 1..=2 {
            cases.push(Case::new(format!("{} dim {v}", functor.name()), top, move || {
                let p = match phi_transform(functor, Field::Rational, v, v, top) {
                    Ok(p) => p,
                    Err(e) => return Outcome::error(e.to_string()),
                };
                let iso: Vec<&str> = p.iso.iter().map(|&b| if b { "iso" } else { "not iso" }).collect();
                let mut out = Outcome::from(phi_comonoid_check(functor, Field::Rational, v, top));
                if out.status.is_pass() && functor == Functor::TStar && !p.is_iso() {
                    out = Outcome::fail("Φ for T* should be invertible in every degree");
                }
                out.with_note(iso.join(", "))
            }));
        }
    }
    cases
}

/// A seeded matrix with entries in `-2..=2`.
pub fn random_matrix(field: Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let mut m = Matrix::zero(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, field.int(rng.gen_range(-2..=2)));
        }
    }
    m
}

fn translate_phi_naturality(_: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let top = cfg.degree.min(3);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    for functor in [Functor::TStar, Functor::SStar] {
        for sample in 0..3 {
            let (v, v2, w, w2) = (1 + sample % 2, 1 + (sample + 1) % 2, 2, 1 + sample % 2);
            let b = random_matrix(Field::Rational, v, v2, &mut rng);
            let a = random_matrix(Field::Rational, w2, w, &mut rng);
            cases.push(Case::new(format!("{} sample {sample}", functor.name()), top, move || phi_naturality_check(functor, &b, &a, top).into()));
        }
    }
    cases
}

fn translate_phi_sigma(_: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let top = cfg.degree.min(3);
    [[1, 1, 1, 1], [2, 1, 1, 2], [1, 2, 2, 1]]
        .into_iter()
        .map(|dims| {
            Case::new(format!("{} dims {dims:?}", Functor::TStar.name()), top, move || phi_sigma_check(Functor::TStar, Field::Rational, dims, top).into())
        })
        .collect()
}

fn translate_lift(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let top = cfg.degree.min(3);
    let mut cases = Vec::new();
    let Some(fx) = corpus.fixture_with("nilpotent") else {
        return vec![Case::new("algebras_q.fx", 0, || Outcome::error("algebras_q.fx is missing"))];
    };
    let runs = [(Functor::TStar, "nilpotent"), (Functor::TStar, "split"), (Functor::SStar, "split")];
    for (functor, rep) in runs {
        let r = fx.reps.get(rep).cloned();
        let m = r.as_ref().and_then(|r| fx.monoid_of(&r.over).cloned());
        cases.push(Case::new(format!("{} {rep}", functor.name()), top, move || match (&r, &m) {
            (Some(r), Some(m)) => lift_and_check(functor, m, &r.rho(), r.dim, top).map(|_| ()).into(),
            _ => Outcome::error("representation missing"),
        }));
    }
    cases
}

fn translate_monoidality(corpus: &Corpus, cfg: &SuiteConfig) -> Vec<Case> {
    let top = cfg.degree.min(3);
    let Some((b, reps)) = z2_reps(corpus) else {
        return vec![Case::new("kz2", 0, || Outcome::error("z2_f3.fx is missing kz2 or its representations"))];
    };
    [(1, 1), (2, 1), (2, 2)]
        .into_iter()
        .map(|(i, j)| {
            let (b, r1, r2) = (b.clone(), reps[i].clone(), reps[j].clone());
            Case::new(format!("{} {} ⊗ {}", Functor::TStar.name(), r1.0, r2.0), top, move || {
                verify_lift_monoidality(Functor::TStar, &b, &r1.1, r1.2, &r2.1, r2.2, top).into()
            })
        })
        .collect()
}
