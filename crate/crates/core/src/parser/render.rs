use std::fmt::Write;

use crate::model::{InstanceFile, InstanceItem, ModuleItem, OntologyModule};

use super::{FileAst, FileItem, SuiteAst};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn module(out: &mut String, m: &OntologyModule) {
    let _ = writeln!(out, "ontology {} at {} {{", m.name, m.level);
    for imp in &m.imports {
        let _ = writeln!(out, "  imports {}", imp.module);
    }
    for (i, item) in m.items.iter().enumerate() {
        if i > 0 || !m.imports.is_empty() {
            out.push('\n');
        }
        match item {
            ModuleItem::Term(t) => {
                let _ = write!(out, "  term {}", t.name);
                if let Some(e) = &t.enriches {
                    let _ = write!(out, " enriches {e}");
                }
                if let Some(s) = t.scope {
                    let _ = write!(out, " scope {}", s.keyword());
                }
                if t.attributes.is_empty() {
                    out.push('\n');
                } else {
                    out.push_str(" {\n");
                    for a in &t.attributes {
                        let _ = writeln!(out, "    {} {}", a.key, quote(&a.value));
                    }
                    out.push_str("  }\n");
                }
            }
            ModuleItem::Relation(r) => {
                let _ = writeln!(
                    out,
                    "  relation {} from {} to {} kind {}",
                    r.name, r.from, r.to, r.kind
                );
            }
        }
    }
    out.push_str("}\n");
}

fn instances(out: &mut String, file: &InstanceFile) {
    let _ = writeln!(out, "instances of {} {{", file.of_module);
    for (i, item) in file.items.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match item {
            InstanceItem::Individual(ind) => {
                let _ = writeln!(out, "  individual {} : {}", ind.name, ind.ty);
            }
            InstanceItem::World(w) => {
                let _ = writeln!(out, "  world {} {{", w.name);
                for t in &w.things {
                    let _ = write!(out, "    thing {}", t.id);
                    if let Some(ty) = &t.instance_of {
                        let _ = write!(out, " : {ty}");
                    }
                    if t.properties.is_empty() && t.powers.is_empty() {
                        out.push_str(" {}\n");
                        continue;
                    }
                    out.push_str(" {\n");
                    for p in &t.properties {
                        let _ = writeln!(out, "      property {};", p.name);
                    }
                    for p in &t.powers {
                        let _ = writeln!(out, "      power {};", p.name);
                    }
                    out.push_str("    }\n");
                }
                for f in &w.facts {
                    let _ = writeln!(out, "    {}({}, {})", f.predicate, f.subject, f.object);
                }
                out.push_str("  }\n");
            }
        }
    }
    out.push_str("}\n");
}

/// Canonical text of one file: two-space indentation, one blank line
/// between top-level blocks and between declarations, source order kept.
pub fn render_file(file: &FileAst) -> String {
    let mut out = String::new();
    for (i, item) in file.items.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        match item {
            FileItem::Module(m) => module(&mut out, m),
            FileItem::Instances(x) => instances(&mut out, x),
        }
    }
    out
}

/// Canonical text of every file, concatenated in order.
pub fn render_canonical(ast: &SuiteAst) -> String {
    let mut out = String::new();
    for (i, f) in ast.files.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&render_file(f));
    }
    out
}
