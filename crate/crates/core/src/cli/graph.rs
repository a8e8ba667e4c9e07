use std::fmt::Write;

use crate::metamodel::{all_term_specs, FOUNDATIONAL_MODULE};
use crate::model::{Level, ResolvedSuite, TermRef};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn term_node(suite: &ResolvedSuite, t: TermRef) -> String {
    quote(&format!("term:{}", suite.term_name(t)))
}

fn module_node(name: &str) -> String {
    quote(&format!("module:{name}"))
}

fn instances_node(i: usize) -> String {
    quote(&format!("instances:{i}"))
}

/// DOT rendering of the suite's layer diagram: one cluster per non-empty
/// level from FO down to IO, a node for every module, term and instance
/// block, solid `enriches` edges, dashed imports, and dotted containment.
pub fn export_graph(suite: &ResolvedSuite) -> String {
    let mut out = String::new();
    out.push_str("digraph ontoarch {\n  rankdir=TB;\n  compound=true;\n");

    for level in Level::ALL {
        let modules: Vec<_> = suite.modules().filter(|(_, m)| m.level == level).collect();
        let has_instances = level == Level::IO && !suite.instance_files().is_empty();
        if level != Level::FO && modules.is_empty() && !has_instances {
            continue;
        }
        let _ = writeln!(out, "  subgraph cluster_{level} {{");
        let _ = writeln!(out, "    label={};", quote(level.as_str()));
        for (_, m) in &modules {
            let _ = writeln!(
                out,
                "    {} [label={}, shape=folder];",
                module_node(&m.name),
                quote(&m.name)
            );
            if m.is_builtin() {
                for spec in all_term_specs() {
                    let t = TermRef::Foundational(spec.id);
                    let _ = writeln!(
                        out,
                        "    {} [label={}, shape=ellipse];",
                        term_node(suite, t),
                        quote(spec.id.ident())
                    );
                }
            }
            for id in &m.terms {
                let _ = writeln!(
                    out,
                    "    {} [label={}, shape=ellipse];",
                    term_node(suite, TermRef::User(*id)),
                    quote(&suite.term(*id).name)
                );
            }
        }
        if level == Level::IO {
            for (i, file) in suite.instance_files().iter().enumerate() {
                let label = format!(
                    "instances of {} ({})",
                    suite.module(file.of_module).name,
                    file.span.file
                );
                let _ = writeln!(
                    out,
                    "    {} [label={}, shape=note];",
                    instances_node(i),
                    quote(&label)
                );
            }
        }
        out.push_str("  }\n");
    }

    for spec in all_term_specs() {
        if let Some(parent) = spec.parent {
            let _ = writeln!(
                out,
                "  {} -> {} [arrowhead=empty];",
                term_node(suite, TermRef::Foundational(spec.id)),
                term_node(suite, TermRef::Foundational(parent))
            );
        }
    }
    for (_, m) in suite.modules() {
        let from = module_node(&m.name);
        for (target, _) in &m.imports {
            let _ = writeln!(
                out,
                "  {from} -> {} [style=dashed];",
                module_node(&suite.module(*target).name)
            );
        }
        for t in &m.terms {
            let _ = writeln!(
                out,
                "  {from} -> {} [style=dotted, arrowhead=none];",
                term_node(suite, TermRef::User(*t))
            );
        }
    }
    for (id, term) in suite.terms() {
        if let Some(target) = term.enriches {
            let _ = writeln!(
                out,
                "  {} -> {} [style=solid, label=\"enriches\"];",
                term_node(suite, TermRef::User(id)),
                term_node(suite, target)
            );
        }
    }
    for (i, file) in suite.instance_files().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {} -> {} [style=dotted];",
            instances_node(i),
            module_node(&suite.module(file.of_module).name)
        );
    }
    out.push_str("}\n");
    debug_assert!(out.contains(&module_node(FOUNDATIONAL_MODULE)));
    out
}

/// Number of node statements in a DOT text produced by [`export_graph`].
pub fn count_nodes(dot: &str) -> usize {
    dot.lines()
        .filter(|l| l.trim_start().starts_with('"') && l.contains("[label=") && !l.contains(" -> "))
        .count()
}
