mod common;

use std::fs;

use ontoarch::cli::{check_sources, count_nodes, export_graph, run_with};
use ontoarch::reporting::{exit_code, render_json, render_text, Report};

use common::{corpus, fixture, fixtures_dir, resolved, suite_dirs};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with(
        std::iter::once("ontoarch").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path(dir: &str) -> String {
    fixtures_dir().join(dir).to_string_lossy().into_owned()
}

/// Set `UPDATE_GOLDEN=1` to rewrite the files after reviewing a change.
#[test]
fn reports_match_golden_files() {
    let golden_dir = fixtures_dir().join("golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for dir in suite_dirs() {
        let json = render_json(&check_sources(&fixture(dir))) + "\n";
        let file = golden_dir.join(format!("{dir}.json"));
        if update {
            fs::create_dir_all(&golden_dir).unwrap();
            fs::write(&file, &json).unwrap();
        }
        let expected =
            fs::read_to_string(&file).unwrap_or_else(|e| panic!("{}: {e}", file.display()));
        assert_eq!(
            json,
            expected,
            "report for {dir} differs from {}",
            file.display()
        );
    }
}

#[test]
fn text_report_shapes() {
    assert_eq!(render_text(&Report::default()), "0 errors, 0 warnings\n");

    let text = render_text(&check_sources(&common::mutate(
        &fixture("fig2"),
        "TestingIO.onto",
        "enables(alice.skill, alice.execute)",
        "enables(alice.skill, loginSuite.run)",
    )));
    let line = text.lines().next().unwrap();
    assert!(line.starts_with("fig2/TestingIO.onto:"), "{line}");
    assert!(
        line.contains("error[E311]") && line.contains("enables(prop, pow)"),
        "{line}"
    );
    assert!(text.ends_with("1 error, 0 warnings\n"));
}

#[test]
fn errors_come_before_warnings_at_equal_spans() {
    let report = check_sources(&corpus());
    let diags = report.diagnostics();
    for pair in diags.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let key = |d: &ontoarch::reporting::Diagnostic| {
            (d.span.file.clone(), d.span.start_line, d.span.start_col)
        };
        assert!(key(a) <= key(b));
        if key(a) == key(b) {
            assert!(a.is_error() || !b.is_error());
        }
    }
}

#[test]
fn json_report_schema() {
    let (code, out, _) = run(&["validate", &path("joint"), "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["report_version"], 1);
    assert_eq!(v["summary"]["errors"], 3);
    let d = &v["diagnostics"][0];
    for key in [
        "anchor", "code", "file", "message", "rule", "severity", "span", "witness",
    ] {
        assert!(d.get(key).is_some(), "missing {key}");
    }
    assert_eq!(d["code"], "E221");
    assert_eq!(
        render_json(&Report::default()),
        r#"{"diagnostics":[],"report_version":1,"summary":{"errors":0,"individuals":0,"modules":{},"relations":0,"terms":0,"warnings":0,"worlds":0}}"#
    );
}

#[test]
fn validate_exit_codes() {
    let (code, out, _) = run(&["validate", &path("fig2")]);
    assert_eq!(code, 0);
    assert!(out.contains("0 errors"));

    let (code, _, _) = run(&["validate", &path("goals")]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["validate", &path("goals"), "--strict"]);
    assert_eq!(code, 1);
    assert_eq!(exit_code(&check_sources(&fixture("joint"))), 1);
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = run(&[]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    let (code, _, err) = run(&["validate", "/definitely/not/here"]);
    assert_eq!(code, 2);
    assert!(err.contains("no such file"));
    let (code, _, _) = run(&["validate", &path("fig2"), "--bogus"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["validate"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["explain", "Zorp"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown topic"));
}

#[test]
fn help_and_version_exit_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("validate"));
    let (code, out, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ontoarch"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let t = target.to_string_lossy().into_owned();
    let (code, out, _) = run(&["validate", &path("fig2"), "--format", "json", "--out", &t]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(written["summary"]["errors"], 0);

    let dot = dir.path().join("g.dot");
    let d = dot.to_string_lossy().into_owned();
    let (code, _, _) = run(&["graph", &path("fig2"), "--out", &d]);
    assert_eq!(code, 0);
    assert!(fs::read_to_string(&dot).unwrap().starts_with("digraph"));
}

#[test]
fn directories_skip_other_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("a.onto"), "ontology A at CO {\n}\n").unwrap();
    fs::write(dir.path().join("notes.txt"), "not an ontology").unwrap();
    let (code, out, _) = run(&["validate", &dir.path().to_string_lossy()]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn explain_topics() {
    let (code, out, _) = run(&["explain", "E313"]);
    assert_eq!(code, 0);
    assert!(out.contains("The Power of a Thing only interacts with other Things."));
    let (_, out, _) = run(&["explain", "Thing"]);
    assert!(out.contains("perceivable or conceivable object, or its individuals"));
    let (_, out, _) = run(&["explain", "ThingCategory"]);
    assert!(out.contains("does not result in instances"));
}

#[test]
fn metamodel_counts() {
    let (code, out, _) = run(&["metamodel", "--counts"]);
    assert_eq!(code, 0);
    assert_eq!(out, "terms=19 properties=10 relationships=12\n");
    let (_, listing, _) = run(&["metamodel"]);
    assert!(listing.contains("ThingCategory") && listing.contains("actsUpon"));
}

#[test]
fn graph_node_count_matches_suite() {
    for dir in suite_dirs() {
        let suite = resolved(&fixture(dir));
        let dot = export_graph(&suite);
        let expected =
            suite.modules().count() + 19 + suite.terms().count() + suite.instance_files().len();
        assert_eq!(count_nodes(&dot), expected, "{dir}");
    }
}

#[test]
fn fig2_graph_clusters() {
    let dot = export_graph(&resolved(&fixture("fig2")));
    let order: Vec<usize> = [
        "cluster_FO",
        "cluster_CO",
        "cluster_TDO",
        "cluster_LDO",
        "cluster_IO",
    ]
    .iter()
    .map(|c| dot.find(c).unwrap_or_else(|| panic!("{c} missing")))
    .collect();
    assert!(order.windows(2).all(|w| w[0] < w[1]));
    let co = &dot[order[1]..order[2]];
    assert!(co.contains("module:ProcessCO") && co.contains("module:SituationCO"));
    assert!(dot.contains("\"module:ProcessCO\" -> \"module:SituationCO\" [style=dashed];"));
    assert!(dot.contains(
        "\"term:SoftwareTDO.SoftwareProcess\" -> \"term:ProcessCO.Process\" [style=solid"
    ));
}

#[test]
fn cli_is_deterministic() {
    let a = run(&["graph", &path("fig2")]);
    let b = run(&["graph", &path("fig2")]);
    assert_eq!(a, b);
    let a = run(&["validate", &path("")]);
    let b = run(&["validate", &path("")]);
    assert_eq!(a, b);
}
