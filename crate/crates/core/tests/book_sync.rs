use std::fs;
use std::path::Path;

#[test]
fn every_chapter_is_listed_and_doctested() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../book/src");
    let summary = fs::read_to_string(root.join("SUMMARY.md")).unwrap();
    let lib = fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("src/lib.rs")).unwrap();
    let mut chapters = 0;
    for entry in fs::read_dir(&root).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        if !name.ends_with(".md") || name == "SUMMARY.md" {
            continue;
        }
        chapters += 1;
        assert!(summary.contains(&format!("({name})")), "{name} is missing from SUMMARY.md");
        assert!(lib.contains(&format!("book/src/{name}\")")), "{name} is not included as a doctest");
    }
    assert!(chapters >= 8);
}
