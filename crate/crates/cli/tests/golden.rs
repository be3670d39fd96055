//! Golden transcripts. Set `UPDATE_GOLDEN=1` to rewrite them.

mod common;

use std::fs;

use common::{expected_exit, golden_dir, transcript, CASES};

#[test]
fn transcripts_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let (first, code) = transcript(args);
        let (second, _) = transcript(args);
        assert_eq!(first, second, "{name}: output differs between runs");
        let path = golden_dir().join(format!("{name}.txt"));
        if update {
            fs::write(&path, &first).unwrap();
            continue;
        }
        let golden = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert!((0..=2).contains(&code), "{name}: exit code {code}");
        if golden != first || expected_exit(&golden) != Some(code) {
            mismatches.push(*name);
        }
    }
    assert!(mismatches.is_empty(), "transcripts differ: {mismatches:?}");
}

#[test]
fn every_golden_file_has_a_case() {
    for entry in fs::read_dir(golden_dir()).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let stem = name.strip_suffix(".txt").unwrap();
        assert!(CASES.iter().any(|(n, _)| *n == stem), "stale golden file {name}");
    }
}
