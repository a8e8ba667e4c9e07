#![allow(dead_code)]

use std::path::{Path, PathBuf};

use ontoarch::cli::{collect_inputs, load_suite, read_sources};
use ontoarch::model::ResolvedSuite;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// `(name, text)` pairs for every `.onto` file under `fixtures/<dir>`, named
/// relative to the fixtures root so reports do not depend on the checkout.
pub fn fixture(dir: &str) -> Vec<(String, String)> {
    let root = fixtures_dir();
    let files = collect_inputs(&[root.join(dir)]).expect("fixture directory exists");
    read_sources(&files)
        .expect("fixture files are readable")
        .into_iter()
        .zip(files)
        .map(|((_, text), path)| {
            let rel = path
                .strip_prefix(&root)
                .unwrap()
                .to_string_lossy()
                .replace('\\', "/");
            (rel, text)
        })
        .collect()
}

/// Every fixture suite together.
pub fn corpus() -> Vec<(String, String)> {
    fixture("")
}

pub fn suite_dirs() -> Vec<&'static str> {
    vec!["fig2", "joint", "goals"]
}

/// Replaces the single occurrence of `from` in the file whose name ends with
/// `file`.
pub fn mutate(
    sources: &[(String, String)],
    file: &str,
    from: &str,
    to: &str,
) -> Vec<(String, String)> {
    let mut out = sources.to_vec();
    let entry = out
        .iter_mut()
        .find(|(name, _)| name.ends_with(file))
        .unwrap_or_else(|| panic!("no fixture file {file}"));
    assert_eq!(
        entry.1.matches(from).count(),
        1,
        "`{from}` must occur once in {file}"
    );
    entry.1 = entry.1.replacen(from, to, 1);
    out
}

pub fn resolved(sources: &[(String, String)]) -> ResolvedSuite {
    let (suite, diags, _) = load_suite(sources);
    assert!(diags.is_empty(), "{diags:#?}");
    suite.expect("suite resolves")
}
