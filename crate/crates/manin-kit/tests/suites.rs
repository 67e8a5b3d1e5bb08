mod common;

use std::collections::HashSet;
use std::time::Duration;

use manin_kit::report::{LawReport, Status, Summary};
use manin_kit::suites::{registry, run_suites, Corpus, SuiteConfig};

fn corpus() -> Corpus {
    Corpus::load(&common::fixtures_dir()).unwrap()
}

fn cheap(name: &str) -> bool {
    name.starts_with("poset.") || name.starts_with("fincat.") || name.starts_with("linrep.") || name == "quadalg.dual-involution"
}

#[test]
fn registry_names_are_unique_and_documented() {
    let doc = include_str!("../src/suites.rs");
    let mut seen = HashSet::new();
    for s in registry() {
        assert!(seen.insert(s.name), "duplicate suite {}", s.name);
        assert!(!s.invariant.is_empty());
        assert!(doc.contains(&format!("| `{}` |", s.name)), "{} missing from the module table", s.name);
    }
    assert_eq!(seen.len(), 28);
}

#[test]
fn every_suite_has_cases() {
    let (c, cfg) = (corpus(), SuiteConfig::default());
    for s in registry() {
        let cases = (s.cases)(&c, &cfg);
        assert!(!cases.is_empty(), "{}", s.name);
        let ids: HashSet<&str> = cases.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), cases.len(), "{} has duplicate case ids", s.name);
    }
}

#[test]
fn cheap_suites_pass_and_are_deterministic() {
    let (c, cfg) = (corpus(), SuiteConfig { degree: 2, ..SuiteConfig::default() });
    let reg = registry();
    let picked: Vec<_> = reg.iter().filter(|s| cheap(s.name)).collect();
    let render = || run_suites(&picked, &c, &cfg).iter().map(|r| r.render(false)).collect::<Vec<_>>().join("\n");
    let (a, b) = (render(), render());
    assert_eq!(a, b);
    let reports = run_suites(&picked, &c, &cfg);
    let summary = Summary::of(&reports);
    assert!(summary.all_passed(), "{a}");
    let keys: Vec<(String, String)> = reports.iter().map(|r| (r.suite.clone(), r.case.clone())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn missing_fixtures_become_errors() {
    let dir = std::env::temp_dir().join(format!("manin-kit-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let c = Corpus::load(&dir).unwrap();
    let reg = registry();
    let picked: Vec<_> = reg.iter().filter(|s| s.name == "coreps.tensor" || s.name == "translate.lift").collect();
    let reports = run_suites(&picked, &c, &SuiteConfig::default());
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| matches!(r.status, Status::Error(_))));
    std::fs::remove_dir(&dir).unwrap();
    assert!(Corpus::load(&dir).is_err());
}

#[test]
fn report_lines() {
    let mut r =
        LawReport { suite: "s".into(), case: "c".into(), status: Status::Pass, degree: 3, note: Some("4 = 4".into()), elapsed: Duration::from_millis(1500) };
    assert_eq!(r.render(false), "PASS   s :: c (degree 3) [4 = 4]");
    assert_eq!(r.render(true), "PASS   s :: c (degree 3) [4 = 4] 1.500s");
    r.status = Status::Fail("coassociativity fails at degree 2".into());
    r.note = None;
    assert_eq!(r.render(false), "FAIL   s :: c (degree 3)\n       witness: coassociativity fails at degree 2");
    let s = Summary::of(&[r.clone()]);
    assert_eq!(s.to_string(), "0 passed, 1 failed, 0 over budget, 0 errors");
    assert!(!s.all_passed());
}
