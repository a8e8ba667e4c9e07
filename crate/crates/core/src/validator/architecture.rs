use crate::model::{Level, ResolvedSuite};
use crate::reporting::Code;

use super::{Violation, Witness};

/// Guideline checks on the module graph.
///
/// The built-in `ThingFO` is the only foundational ontology, so a user module
/// at FO is E201. Imports must stay within one level (E202), and nothing may
/// import into or out of the foundational level (E203, which takes
/// precedence over E202).
pub fn check_architecture(suite: &ResolvedSuite) -> Vec<Violation> {
    let mut out = Vec::new();
    for (_, m) in suite.user_modules() {
        let Some(span) = &m.span else { continue };
        if m.level == Level::FO {
            out.push(Violation::new(
                Code::E201,
                span.clone(),
                format!(
                    "module `{}` is declared at FO, but ThingFO is the only foundational ontology",
                    m.name
                ),
                Witness::Module {
                    module: m.name.clone(),
                    level: m.level.to_string(),
                },
            ));
        }
        for (target, imp_span) in &m.imports {
            let t = suite.module(*target);
            let witness = Witness::Import {
                from: m.name.clone(),
                from_level: m.level.to_string(),
                to: t.name.clone(),
                to_level: t.level.to_string(),
            };
            let v = if m.level == Level::FO || t.level == Level::FO {
                Violation::new(
                    Code::E203,
                    imp_span.clone(),
                    format!(
                        "`{}` imports `{}`: imports are not allowed at the foundational level",
                        m.name, t.name
                    ),
                    witness,
                )
            } else if m.level != t.level {
                Violation::new(
                    Code::E202,
                    imp_span.clone(),
                    format!(
                        "`{}` at {} imports `{}` at {}: only same-level ontologies may be related",
                        m.name, m.level, t.name, t.level
                    ),
                    witness,
                )
            } else {
                continue;
            };
            let v = match &t.span {
                Some(s) => v.with_related(s.clone()),
                None => v,
            };
            out.push(v);
        }
    }
    out.sort();
    out
}
