use std::fmt::Write;

use crate::metamodel::{
    all_property_specs, all_relationship_specs, properties_of, root_kind, RelationshipSpec, TermId,
    TermSpec, FOUNDATIONAL_MODULE,
};
use crate::reporting::{Code, CODES};
use crate::validator::RuleId;

/// Lowercase with spaces, hyphens and underscores removed, so "thing
/// category", "Thing-Category" and "ThingCategory" all match.
fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !matches!(c, ' ' | '-' | '_'))
        .flat_map(char::to_lowercase)
        .collect()
}

fn term_text(spec: &TermSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} ({FOUNDATIONAL_MODULE}.{})",
        spec.display_name, spec.id
    );
    match spec.parent {
        Some(p) => {
            let _ = writeln!(out, "parent: {p}");
        }
        None => {
            let _ = writeln!(out, "taxonomy root");
        }
    }
    if !spec.synonyms.is_empty() {
        let _ = writeln!(out, "synonyms: {}", spec.synonyms.join(", "));
    }
    let _ = writeln!(out, "\ndefinition:\n  {}", spec.definition);
    if !spec.notes.is_empty() {
        out.push_str("\nnotes:\n");
        for (i, n) in spec.notes.iter().enumerate() {
            let _ = writeln!(out, "  {}. {n}", i + 1);
        }
    }
    let props: Vec<_> = properties_of(spec.id).collect();
    if !props.is_empty() {
        out.push_str("\nproperties:\n");
        for p in props {
            let _ = writeln!(out, "  {} ({}): {}", p.key, p.owner, p.definition);
        }
    }
    let rels: Vec<_> = all_relationship_specs()
        .iter()
        .filter(|r| r.domain == spec.id || r.range == spec.id)
        .collect();
    if !rels.is_empty() {
        out.push_str("\nrelationships:\n");
        for r in rels {
            let _ = writeln!(out, "  {} -{}-> {}", r.domain, r.ident, r.range);
        }
    }
    let _ = writeln!(out, "\nroot: {}", root_kind(spec.id));
    out
}

fn relationship_text(spec: &RelationshipSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} ({FOUNDATIONAL_MODULE}.{})", spec.name, spec.ident);
    let _ = writeln!(out, "domain: {}\nrange: {}", spec.domain, spec.range);
    if let Some(m) = spec.multiplicity {
        let max = m.max.map_or("*".to_string(), |x| x.to_string());
        let _ = writeln!(out, "multiplicity: {}..{max}", m.min);
    }
    if !spec.axioms.is_empty() {
        let axioms: Vec<String> = spec.axioms.iter().map(|a| format!("{a:?}")).collect();
        let _ = writeln!(out, "restricted by: {}", axioms.join(", "));
    }
    let _ = writeln!(out, "\ndefinition:\n  {}", spec.definition);
    for n in spec.notes {
        let _ = writeln!(out, "  {n}");
    }
    out
}

fn code_text(code: Code) -> String {
    let info = code.info();
    let mut out = String::new();
    let _ = writeln!(out, "{} ({}): {}", code, code.severity(), info.title);
    if let Some(rule) = info.rule {
        let _ = writeln!(out, "rule: {rule}\n  {}", rule.wording());
    }
    if !info.anchor.is_empty() {
        let _ = writeln!(out, "anchor: {}", info.anchor);
    }
    out.push_str("\nexample:\n");
    for line in info.example.lines() {
        let _ = writeln!(out, "  {line}");
    }
    out
}

fn rule_text(rule: RuleId) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{rule}\n  {}", rule.wording());
    let codes: Vec<&str> = CODES
        .iter()
        .filter(|i| i.rule == Some(rule))
        .map(|i| i.code.as_str())
        .collect();
    if !codes.is_empty() {
        let _ = writeln!(out, "codes: {}", codes.join(", "));
    }
    out
}

/// Documentation for a diagnostic code, rule id, foundational term,
/// relationship or property key. `None` when nothing matches.
pub fn explain(topic: &str) -> Option<String> {
    let topic = topic.trim();
    if let Some(code) = Code::parse(topic) {
        return Some(code_text(code));
    }
    if let Some(rule) = RuleId::parse(topic) {
        return Some(rule_text(rule));
    }
    let key = normalize(topic.strip_prefix("ThingFO.").unwrap_or(topic));
    if let Some(id) = TermId::ALL
        .into_iter()
        .find(|t| normalize(t.ident()) == key || normalize(t.display_name()) == key)
    {
        return Some(term_text(id.spec()));
    }
    let rels: Vec<&RelationshipSpec> = all_relationship_specs()
        .iter()
        .filter(|r| normalize(r.ident) == key)
        .collect();
    let rels = if rels.is_empty() {
        all_relationship_specs()
            .iter()
            .filter(|r| normalize(r.name) == key)
            .collect()
    } else {
        rels
    };
    if !rels.is_empty() {
        return Some(
            rels.into_iter()
                .map(relationship_text)
                .collect::<Vec<_>>()
                .join("\n"),
        );
    }
    let props: Vec<String> = all_property_specs()
        .iter()
        .filter(|p| normalize(p.key) == key || normalize(p.display_name) == key)
        .map(|p| {
            format!(
                "{} ({}.{}): {}\n",
                p.display_name, p.owner, p.key, p.definition
            )
        })
        .collect();
    if !props.is_empty() {
        return Some(props.join(""));
    }
    None
}
