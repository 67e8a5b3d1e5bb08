use std::collections::BTreeSet;
use std::path::Path;

const BOOK: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../book/src");

#[test]
fn every_chapter_is_listed_and_tested() {
    let summary = std::fs::read_to_string(Path::new(BOOK).join("SUMMARY.md")).unwrap();
    let listed: BTreeSet<String> = summary.split("](").skip(1).map(|s| s[..s.find(')').unwrap()].to_string()).collect();
    let on_disk: BTreeSet<String> =
        std::fs::read_dir(BOOK).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).filter(|n| n.ends_with(".md") && n != "SUMMARY.md").collect();
    assert_eq!(listed, on_disk);
    let lib = include_str!("../src/lib.rs");
    for ch in &on_disk {
        assert!(lib.contains(&format!("book/src/{ch}\")")), "{ch} is not included as a doctest");
    }
}
