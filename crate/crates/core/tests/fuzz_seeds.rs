//! Replays the fuzz seed corpora through the parser entry points and checks
//! that arbitrary text never makes them panic.

use std::fs;
use std::path::PathBuf;

use proptest::prelude::*;

use renner_core::cli::{exit_code, parse_args, JobSpec};
use renner_core::export::MonoidDocument;
use renner_core::parse::{parse_index_list, parse_j0, parse_type, parse_weight};
use renner_core::partialinj::PartialInjection;

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut paths: Vec<PathBuf> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds in {}", dir.display());
    paths.iter().map(|p| fs::read(p).unwrap()).collect()
}

fn text_targets(data: &str) {
    if let Ok(cartan) = parse_type(data) {
        assert_eq!(parse_type(&cartan.to_string()).unwrap(), cartan);
    }
    if let Ok(list) = parse_index_list(data) {
        let _ = parse_weight(data, list.len());
    }
    for rank in [1, 4, 8] {
        let _ = parse_j0(data, rank);
    }
    if let Ok(doc) = MonoidDocument::from_json(data) {
        assert_eq!(MonoidDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
    if let Ok(cli) = parse_args(std::iter::once("renner").chain(data.lines())) {
        if let Err(e) = JobSpec::from_cli(&cli) {
            assert_eq!(exit_code(&e), 2);
        }
    }
}

fn partial_injection_target(data: &[u8]) {
    let Some((&degree, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(sigma) = PartialInjection::from_json(text, degree as usize) {
        assert_eq!(PartialInjection::from_json(&sigma.to_json(), degree as usize).unwrap(), sigma);
    }
}

#[test]
fn seed_corpora_replay() {
    for target in ["parse_type", "parse_lists", "monoid_export_json", "cli_args"] {
        for seed in seeds(target) {
            text_targets(std::str::from_utf8(&seed).unwrap());
        }
    }
    for seed in seeds("partial_injection_json") {
        partial_injection_target(&seed);
    }
    let a2 = seeds("monoid_export_json").into_iter().map(String::from_utf8).collect::<Result<Vec<_>, _>>().unwrap();
    assert!(a2.iter().all(|doc| MonoidDocument::from_json(doc).is_ok()));
}

proptest! {
    #[test]
    fn arbitrary_text_never_panics(data in "\\PC{0,40}") {
        text_targets(&data);
    }

    #[test]
    fn structured_text_never_panics(data in "[ABCDFGabcdfgx0-9,\\[\\] \\n-]{0,24}") {
        text_targets(&data);
        let mut bytes = vec![5u8];
        bytes.extend(data.as_bytes());
        partial_injection_target(&bytes);
    }

    #[test]
    fn arbitrary_bytes_never_panic(data in proptest::collection::vec(any::<u8>(), 0..48)) {
        partial_injection_target(&data);
    }
}
