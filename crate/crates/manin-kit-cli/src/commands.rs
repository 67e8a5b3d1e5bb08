use std::path::PathBuf;
use std::time::Instant;

use manin_kit::cohomcoend::{coend_comonoid, cohom as cohom_object, verify_adjunction as adjunction};
use manin_kit::coreps::{coaction_tensor_check, corep_check, tensor_corep as tensor_coreps, tensor_corep_unit};
use manin_kit::exactlin::{Field, Matrix};
use manin_kit::fincat::{
    relative_adjunction_with_parameter, relative_left_adjoint, verify_cohom_bifunctor, verify_relative_adjoint, Category, IdentityFunctor, TieBreak,
};
use manin_kit::fixture::{write_algebra, CategoryDef, Fixture, RepDef};
use manin_kit::laws::LawResult;
use manin_kit::linrep::{monoid_rep_bridge, pi_law_suite, rep_check, tensor_rep as tensor_reps, VecBimonoid};
use manin_kit::posetcat::{check_downset_table, check_p_table, render_tables, verify_subcategory_cohom_differs, MaxPoset, SubsetCategory, MAX_GROUND};
use manin_kit::quadalg::{GradedAlgebra, QuadraticAlgebra};
use manin_kit::report::{LawReport, Status};
use manin_kit::suites::{registry, run_suites, Corpus, Suite, SuiteConfig};
use manin_kit::translate::{lift_and_check, lift_rep as lift, verify_lift_monoidality as lift_monoidality, Functor};

use crate::output::{CliError, Output};
use crate::Opts;

type Res = Result<Output, CliError>;

fn resolve(o: &Opts, file: &str) -> PathBuf {
    let p = PathBuf::from(file);
    if p.exists() {
        p
    } else {
        o.fixtures.join(file)
    }
}

fn load(o: &Opts, file: &str) -> Result<Fixture, CliError> {
    Ok(Fixture::load(&resolve(o, file))?)
}

/// `FILE` or `FILE:NAME`.
fn algebra(o: &Opts, spec: &str) -> Result<(String, QuadraticAlgebra), CliError> {
    let (file, name) = match spec.rsplit_once(':') {
        Some((f, n)) => (f, Some(n)),
        None => (spec, None),
    };
    let fx = load(o, file)?;
    let a = fx.algebra(name).ok_or_else(|| match name {
        Some(n) => CliError::Input(format!("{file} has no algebra `{n}`")),
        None => CliError::Input(format!("{file} holds {} algebras; pick one with {file}:NAME", fx.algebras.len())),
    })?;
    let label = match name {
        Some(n) => n.to_string(),
        None => fx.algebras.keys().next().cloned().unwrap_or_default(),
    };
    Ok((label, a.clone()))
}

fn rep<'a>(fx: &'a Fixture, file: &str, name: &str) -> Result<&'a RepDef, CliError> {
    fx.reps.get(name).ok_or_else(|| CliError::Input(format!("{file} has no representation `{name}`")))
}

fn bimonoid<'a>(fx: &'a Fixture, file: &str, r: &RepDef) -> Result<&'a VecBimonoid, CliError> {
    fx.bimonoids.get(&r.over).map(|b| &b.bimonoid).ok_or_else(|| CliError::Input(format!("{file}: `{}` is not a bimonoid", r.over)))
}

/// Rejects a functor the field cannot carry before any law is checked.
fn supported(functor: Functor, f: Field) -> Result<(), CliError> {
    functor.object(f, 1)?;
    Ok(())
}

fn same_over(a: &RepDef, b: &RepDef) -> Result<(), CliError> {
    if a.over != b.over {
        return Err(CliError::Input(format!("representations are over `{}` and `{}`", a.over, b.over)));
    }
    Ok(())
}

fn dims_line(g: &GradedAlgebra) -> String {
    g.dims().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn report(suite: &str, case: &str, degree: usize, r: LawResult, start: Instant) -> LawReport {
    let status = match r {
        Ok(()) => Status::Pass,
        Err(f) => f.into(),
    };
    LawReport { suite: suite.into(), case: case.into(), status, degree, note: None, elapsed: start.elapsed() }
}

pub fn dual(o: &Opts, spec: &str) -> Res {
    let (name, a) = algebra(o, spec)?;
    let d = a.dual();
    let mut out = Output::new(o.timings);
    out.line(format!("@field {}", a.field()));
    out.text.push_str(&write_algebra(&format!("{name}_dual"), &d));
    out.line(format!("# dims {}", dims_line(&d.graded(o.degree))));
    Ok(out)
}

pub enum Product {
    White,
    Black,
}

pub fn product(o: &Opts, a: &str, b: &str, which: Product) -> Res {
    let (na, a) = algebra(o, a)?;
    let (nb, b) = algebra(o, b)?;
    let (p, sep) = match which {
        Product::White => (a.white(&b)?, "white"),
        Product::Black => (a.black(&b)?, "black"),
    };
    let mut out = Output::new(o.timings);
    out.line(format!("@field {}", a.field()));
    out.text.push_str(&write_algebra(&format!("{na}_{sep}_{nb}"), &p));
    out.line(format!("# dims {}", dims_line(&p.graded(o.degree))));
    Ok(out)
}

fn degree_lines(out: &mut Output, g: &GradedAlgebra) {
    for (k, d) in g.dims().iter().enumerate() {
        out.line(format!("degree {k}: {d}"));
    }
}

pub fn cohom(o: &Opts, a: &str, b: &str) -> Res {
    let (na, a) = algebra(o, a)?;
    let (nb, b) = algebra(o, b)?;
    let c = cohom_object(&a, &b, o.degree)?;
    let mut out = Output::new(o.timings);
    out.line(format!("cohom({na}, {nb}) over {}: {} generators, {} relations", a.field(), c.algebra.gens(), c.algebra.relations().dim()));
    degree_lines(&mut out, &c.graded());
    Ok(out)
}

pub fn coend(o: &Opts, b: &str) -> Res {
    let (nb, b) = algebra(o, b)?;
    let c = coend_comonoid(&b, o.degree)?;
    let mut out = Output::new(o.timings);
    out.line(format!("coend({nb}) over {}: {} generators, {} relations", b.field(), c.algebra().gens(), c.algebra().relations().dim()));
    degree_lines(&mut out, &c.graded());
    Ok(out)
}

const SHOWN_BASIS: usize = 16;

pub fn truncate(o: &Opts, spec: &str) -> Res {
    let (name, a) = algebra(o, spec)?;
    let g = a.graded(o.degree);
    let mut out = Output::new(o.timings);
    out.line(format!("{name} over {} up to degree {}", a.field(), o.degree));
    for k in 0..=o.degree {
        let d = g.dim(k);
        let mut names: Vec<String> = (0..d.min(SHOWN_BASIS)).map(|i| g.basis_name(k, i)).collect();
        if d > SHOWN_BASIS {
            names.push(format!("(+{} more)", d - SHOWN_BASIS));
        }
        out.line(format!("degree {k}: dim {d}: {}", names.join(" ")));
    }
    Ok(out)
}

pub fn verify_comonoid(o: &Opts, b: &str) -> Res {
    let (nb, b) = algebra(o, b)?;
    let start = Instant::now();
    let c = coend_comonoid(&b, o.degree)?;
    let mut out = Output::new(o.timings);
    out.report(report("verify-comonoid", &format!("coend({nb})"), o.degree, c.as_comonoid().check(o.degree), start));
    Ok(out)
}

pub fn verify_adjunction(o: &Opts, a: &str, b: &str, z: &str) -> Res {
    let (na, a) = algebra(o, a)?;
    let (nb, b) = algebra(o, b)?;
    let (nz, z) = algebra(o, z)?;
    if a.field() == Field::Rational {
        return Err(CliError::Input("adjunction counts need a finite field".into()));
    }
    let start = Instant::now();
    let r = adjunction(&a, &b, &z, o.degree, o.budget)?;
    let mut out = Output::new(o.timings);
    out.line(format!("|Hom(cohom({na},{nb}), {nz})| = {}", r.lhs));
    out.line(format!("|Hom({nb}, {nz}∘{na})| = {}", r.rhs));
    let status = if r.passed() { Status::Pass } else { Status::Fail(format!("{r:?}")) };
    out.report(LawReport {
        suite: "verify-adjunction".into(),
        case: format!("({na}, {nb}, {nz})"),
        status,
        degree: o.degree.max(2),
        note: None,
        elapsed: start.elapsed(),
    });
    Ok(out)
}

pub fn verify_corep(o: &Opts, file: &str, name: &str, functor: Functor) -> Res {
    let fx = load(o, file)?;
    let r = rep(&fx, file, name)?;
    let x = fx.monoid_of(&r.over).ok_or_else(|| CliError::Input(format!("unknown monoid `{}`", r.over)))?;
    supported(functor, fx.field)?;
    let start = Instant::now();
    let mut out = Output::new(o.timings);
    let res = lift_and_check(functor, x, &r.rho(), r.dim, o.degree).map(|_| ());
    out.report(report("verify-corep", &format!("{} {name}", functor.name()), o.degree, res, start));
    Ok(out)
}

pub fn tensor_corep(o: &Opts, file: &str, r1: &str, r2: &str) -> Res {
    let fx = load(o, file)?;
    let (a, b) = (rep(&fx, file, r1)?, rep(&fx, file, r2)?);
    same_over(a, b)?;
    let bm = bimonoid(&fx, file, a)?;
    let top = o.degree;
    let x = Functor::TStar.bimonoid(bm, top)?;
    let la = lift(Functor::TStar, &a.rho(), a.dim, top)?;
    let lb = lift(Functor::TStar, &b.rho(), b.dim, top)?;
    let mut out = Output::new(o.timings);
    let start = Instant::now();
    let t = tensor_coreps(&la, &lb, &x)?;
    out.line(format!("coend({r1} ⊗ {r2}) dims {}", dims_line(&t.coend.graded())));
    let case = format!("{r1} ⊗ {r2}");
    out.report(report("tensor-corep corep laws", &case, top, corep_check(&t, &x.comonoid, top), start));
    let start = Instant::now();
    out.report(report("tensor-corep coaction", &case, top, coaction_tensor_check(&la, &lb, &t, &x, top), start));
    let start = Instant::now();
    out.report(report("tensor-corep unit", r1, top, tensor_corep_unit(&la, &x, top), start));
    Ok(out)
}

pub fn verify_pi_laws(o: &Opts, field: Field, max_dim: usize) -> Res {
    let mut out = Output::new(o.timings);
    for (name, r) in pi_law_suite(field, max_dim) {
        let start = Instant::now();
        out.report(report("verify-pi-laws", &format!("{field} {name}"), 0, r, start));
    }
    out.summary();
    Ok(out)
}

pub fn verify_rep(o: &Opts, file: &str, name: &str) -> Res {
    let fx = load(o, file)?;
    let r = rep(&fx, file, name)?;
    let x = fx.monoid_of(&r.over).ok_or_else(|| CliError::Input(format!("unknown monoid `{}`", r.over)))?;
    let mut out = Output::new(o.timings);
    let start = Instant::now();
    out.report(report("verify-rep", name, 0, rep_check(&r.rho(), x, r.dim), start));
    let finite = fx.bimonoids.get(&r.over).and_then(|b| b.finite.clone()).or_else(|| fx.monoids.get(&r.over).and_then(|m| m.finite.clone()));
    if let Some(m) = finite {
        let start = Instant::now();
        let (unit, mul) = monoid_rep_bridge(&m, &r.actions);
        out.report(report("verify-rep monoid unit", name, 0, unit, start));
        out.report(report("verify-rep monoid product", name, 0, mul, start));
    }
    Ok(out)
}

pub fn tensor_rep(o: &Opts, file: &str, r1: &str, r2: &str) -> Res {
    let fx = load(o, file)?;
    let (a, b) = (rep(&fx, file, r1)?, rep(&fx, file, r2)?);
    same_over(a, b)?;
    let bm = bimonoid(&fx, file, a)?;
    let labels = &fx.bimonoids[&a.over].labels;
    let t = tensor_reps(&a.rho(), a.dim, &b.rho(), b.dim, bm);
    let d = a.dim * b.dim;
    let mut out = Output::new(o.timings);
    for (i, l) in labels.iter().enumerate() {
        let col: Vec<_> = (0..d * d).map(|k| t.get(k, i).clone()).collect();
        let m = Matrix::from_rows(a.rho().field(), col.chunks(d).map(<[_]>::to_vec).collect()).expect("square action");
        out.line(format!("act {l}"));
        out.text.push_str(&m.to_string());
    }
    let start = Instant::now();
    out.report(report("tensor-rep", &format!("{r1} ⊗ {r2}"), 0, rep_check(&t, &bm.monoid, d), start));
    Ok(out)
}

pub fn lift_rep(o: &Opts, file: &str, name: &str, functor: Functor) -> Res {
    let fx = load(o, file)?;
    let r = rep(&fx, file, name)?;
    let x = fx.monoid_of(&r.over).ok_or_else(|| CliError::Input(format!("unknown monoid `{}`", r.over)))?;
    supported(functor, fx.field)?;
    let mut out = Output::new(o.timings);
    let start = Instant::now();
    match lift_and_check(functor, x, &r.rho(), r.dim, o.degree) {
        Ok(c) => {
            out.line(format!("{}({name}): coend dims {}", functor.name(), dims_line(&c.coend.graded())));
            out.line("ω in degree 1:");
            out.text.push_str(&c.omega.degree1().to_string());
            out.report(report("lift-rep", name, o.degree, Ok(()), start));
        }
        Err(f) => out.report(report("lift-rep", name, o.degree, Err(f), start)),
    }
    Ok(out)
}

pub fn verify_lift_monoidality(o: &Opts, file: &str, r1: &str, r2: &str, functor: Functor) -> Res {
    let fx = load(o, file)?;
    let (a, b) = (rep(&fx, file, r1)?, rep(&fx, file, r2)?);
    same_over(a, b)?;
    let bm = bimonoid(&fx, file, a)?;
    supported(functor, fx.field)?;
    let mut out = Output::new(o.timings);
    let start = Instant::now();
    let r = lift_monoidality(functor, bm, &a.rho(), a.dim, &b.rho(), b.dim, o.degree);
    out.report(report("verify-lift-monoidality", &format!("{} {r1} ⊗ {r2}", functor.name()), o.degree, r, start));
    Ok(out)
}

pub fn poset_table(o: &Opts, n: usize) -> Res {
    if n > MAX_GROUND {
        return Err(CliError::Input(format!("--n {n} is above {MAX_GROUND}")));
    }
    let mut out = Output::new(o.timings);
    out.text.push_str(&render_tables(n));
    out.line("");
    let p = MaxPoset::new(n).map_err(|e| CliError::Input(e.to_string()))?;
    let start = Instant::now();
    let st = match check_p_table(&p) {
        Some(c) if c.passed() => Status::Pass,
        Some(c) => Status::Fail(format!("search disagrees at {:?}", c.mismatches)),
        None => Status::Fail("search found no cohom".into()),
    };
    out.report(LawReport { suite: "poset-table".into(), case: "max poset search".into(), status: st, degree: 0, note: None, elapsed: start.elapsed() });
    let c = SubsetCategory::new(n).map_err(|e| CliError::Input(e.to_string()))?;
    let start = Instant::now();
    let st = match check_downset_table(&c) {
        Some(c) if c.passed() => Status::Pass,
        Some(c) => Status::Fail(format!("search disagrees at {:?}", c.mismatches)),
        None => Status::Fail("search found no cohom".into()),
    };
    out.report(LawReport { suite: "poset-table".into(), case: "downset search".into(), status: st, degree: 0, note: None, elapsed: start.elapsed() });
    let d = verify_subcategory_cohom_differs(n).map_err(|e| CliError::Input(e.to_string()))?;
    out.line(format!("cohoms differ on {} pairs", d.witnesses.len()));
    Ok(out)
}

fn search_report<C: Category>(out: &mut Output, c: &C, name: &str, tie: TieBreak) {
    let all: Vec<usize> = (0..c.objects()).collect();
    let start = Instant::now();
    let status = match relative_left_adjoint(c, c, &IdentityFunctor, &all, tie) {
        Some(adj) => {
            for (x, y) in adj.objects.iter().enumerate() {
                out.line(format!("F({}) = {}", c.object_name(x), c.object_name(*y)));
            }
            match verify_relative_adjoint(c, c, &IdentityFunctor, &adj) {
                Ok(()) => Status::Pass,
                Err(e) => Status::Fail(e),
            }
        }
        None => Status::Fail("no left adjoint to the identity".into()),
    };
    out.report(LawReport { suite: "fincat-search".into(), case: format!("{name} identity"), status, degree: 0, note: None, elapsed: start.elapsed() });
}

pub fn fincat_search(o: &Opts, file: &str, name: &str, tie: TieBreak) -> Res {
    let fx = load(o, file)?;
    let def = fx.categories.get(name).ok_or_else(|| CliError::Input(format!("{file} has no category `{name}`")))?;
    let mut out = Output::new(o.timings);
    match def {
        CategoryDef::Explicit(c) => search_report(&mut out, c, name, tie),
        CategoryDef::Preorder(c) => {
            search_report(&mut out, c, name, tie);
            if c.has_tensor() {
                let all: Vec<usize> = (0..c.objects()).collect();
                let start = Instant::now();
                let status = match relative_adjunction_with_parameter(c, &all, tie) {
                    Some(t) => {
                        out.line("cohom(V,W), rows V, columns W:");
                        for &v in &all {
                            let row: Vec<String> = all.iter().map(|&w| c.object_name(t.get(v, w).expect("in table").0)).collect();
                            out.line(format!("{:>6} | {}", c.object_name(v), row.join(" ")));
                        }
                        match verify_cohom_bifunctor(c, &t) {
                            Ok(()) => Status::Pass,
                            Err(e) => Status::Fail(e),
                        }
                    }
                    None => {
                        out.line("not coclosed: some cohom(V,W) is missing");
                        Status::Pass
                    }
                };
                out.report(LawReport { suite: "fincat-search".into(), case: format!("{name} cohom"), status, degree: 0, note: None, elapsed: start.elapsed() });
            }
        }
    }
    Ok(out)
}

pub fn suite(o: &Opts, names: &[String], all: bool, list: bool) -> Res {
    let reg = registry();
    let mut out = Output::new(o.timings);
    if list {
        for s in &reg {
            out.line(format!("{:<26} {}", s.name, s.invariant));
        }
        return Ok(out);
    }
    let chosen: Vec<&Suite> = if all {
        reg.iter().collect()
    } else {
        if names.is_empty() {
            return Err(CliError::Input("name suites or pass --all".into()));
        }
        let picked: Vec<&Suite> = reg.iter().filter(|s| names.iter().any(|n| s.name == n || s.name.starts_with(&format!("{n}.")))).collect();
        if picked.is_empty() {
            return Err(CliError::Input(format!("no suite matches {names:?}")));
        }
        picked
    };
    let corpus = Corpus::load(&o.fixtures)?;
    let cfg = SuiteConfig { degree: o.degree, seed: o.seed, budget: o.budget };
    for r in run_suites(&chosen, &corpus, &cfg) {
        out.report(r);
    }
    out.summary();
    Ok(out)
}
