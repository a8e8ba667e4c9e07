//! Diagnostics, reports, and their text/JSON renderings.
//!
//! JSON report schema, version 1 (keys are emitted sorted, no whitespace):
//!
//! ```text
//! {
//!   "diagnostics": [
//!     { "anchor": string, "code": "E311", "file": string, "message": string,
//!       "rule": string | null, "severity": "error" | "warning",
//!       "span": { "end_col": int, "end_line": int, "start_col": int, "start_line": int },
//!       "witness": string | null }
//!   ],
//!   "report_version": 1,
//!   "summary": { "errors": int, "individuals": int, "modules": { "<level>": int },
//!                "relations": int, "terms": int, "warnings": int, "worlds": int }
//! }
//! ```

mod codes;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

pub use codes::{Code, CodeInfo, CODES};

use crate::model::Level;
use crate::parser::SourceSpan;
use crate::validator::RuleId;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Severity {
    Error,
    Warning,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        }
    }

    // Errors sort ahead of warnings.
    fn rank(self) -> u8 {
        match self {
            Severity::Error => 0,
            Severity::Warning => 1,
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagnostic {
    pub code: Code,
    pub severity: Severity,
    pub rule: Option<RuleId>,
    pub message: String,
    pub span: SourceSpan,
    pub anchor: String,
    pub witness: Option<String>,
}

impl Diagnostic {
    /// Severity, rule and anchor are filled in from the code catalog.
    pub fn new(code: Code, span: SourceSpan, message: impl Into<String>) -> Self {
        let info = code.info();
        Diagnostic {
            code,
            severity: code.severity(),
            rule: info.rule,
            message: message.into(),
            span,
            anchor: info.anchor.to_string(),
            witness: None,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn with_anchor(mut self, anchor: impl Into<String>) -> Self {
        self.anchor = anchor.into();
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl Ord for Diagnostic {
    fn cmp(&self, other: &Self) -> Ordering {
        let s = &self.span;
        let o = &other.span;
        (
            &s.file,
            s.start_line,
            s.start_col,
            self.severity.rank(),
            self.code,
        )
            .cmp(&(
                &o.file,
                o.start_line,
                o.start_col,
                other.severity.rank(),
                other.code,
            ))
            .then_with(|| (s.end_line, s.end_col).cmp(&(o.end_line, o.end_col)))
            .then_with(|| self.message.cmp(&other.message))
            .then_with(|| self.witness.cmp(&other.witness))
            .then_with(|| self.anchor.cmp(&other.anchor))
            .then_with(|| self.rule.cmp(&other.rule))
    }
}

impl PartialOrd for Diagnostic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Counts describing the validated suite.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub modules: BTreeMap<Level, usize>,
    pub terms: usize,
    pub relations: usize,
    pub individuals: usize,
    pub worlds: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    diagnostics: Vec<Diagnostic>,
    pub summary: SuiteSummary,
}

impl Report {
    /// Sorts by (file, line, column, severity, code) and drops exact duplicates.
    pub fn new(mut diagnostics: Vec<Diagnostic>, summary: SuiteSummary) -> Self {
        diagnostics.sort();
        diagnostics.dedup();
        Report {
            diagnostics,
            summary,
        }
    }

    pub fn diagnostics(&self) -> &[Diagnostic] {
        &self.diagnostics
    }

    pub fn errors(&self) -> usize {
        self.diagnostics.iter().filter(|d| d.is_error()).count()
    }

    pub fn warnings(&self) -> usize {
        self.diagnostics.len() - self.errors()
    }

    pub fn codes(&self) -> Vec<Code> {
        self.diagnostics.iter().map(|d| d.code).collect()
    }
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for d in report.diagnostics() {
        out.push_str(&format!(
            "{}:{}:{}: {}[{}] {}",
            d.span.file, d.span.start_line, d.span.start_col, d.severity, d.code, d.message
        ));
        if !d.anchor.is_empty() {
            out.push_str(&format!(" ({})", d.anchor));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "{}, {}\n",
        plural(report.errors(), "error"),
        plural(report.warnings(), "warning")
    ));
    out
}

fn diagnostic_json(d: &Diagnostic) -> Value {
    json!({
        "anchor": d.anchor,
        "code": d.code.as_str(),
        "file": d.span.file,
        "message": d.message,
        "rule": d.rule.map(|r| r.as_str()),
        "severity": d.severity.as_str(),
        "span": {
            "start_line": d.span.start_line,
            "start_col": d.span.start_col,
            "end_line": d.span.end_line,
            "end_col": d.span.end_col,
        },
        "witness": d.witness,
    })
}

pub fn report_json(report: &Report) -> Value {
    let modules: serde_json::Map<String, Value> = report
        .summary
        .modules
        .iter()
        .map(|(level, n)| (level.as_str().to_string(), json!(n)))
        .collect();
    json!({
        "diagnostics": report.diagnostics().iter().map(diagnostic_json).collect::<Vec<_>>(),
        "report_version": REPORT_VERSION,
        "summary": {
            "errors": report.errors(),
            "warnings": report.warnings(),
            "modules": modules,
            "terms": report.summary.terms,
            "relations": report.summary.relations,
            "individuals": report.summary.individuals,
            "worlds": report.summary.worlds,
        },
    })
}

/// Canonical JSON: serde_json's default map is ordered, so keys come out
/// sorted and the compact writer emits no insignificant whitespace.
pub fn render_json(report: &Report) -> String {
    serde_json::to_string(&report_json(report)).expect("report JSON is always serializable")
}

/// 0 when there are no errors, 1 otherwise. Exit code 2 is reserved for
/// usage and I/O failures in the CLI.
pub fn exit_code(report: &Report) -> i32 {
    if report.errors() > 0 {
        1
    } else {
        0
    }
}

/// Like [`exit_code`], but any warning also fails.
pub fn exit_code_strict(report: &Report) -> i32 {
    if report.diagnostics().is_empty() {
        0
    } else {
        1
    }
}
