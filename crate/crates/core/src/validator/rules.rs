//! Layering rules.
//!
//! Rule #1 is checked against a *view*: a set of same-level modules read
//! together. Declarations at strictly higher levels are always visible.
//! When a relation's kind chain steps onto a same-level declaration outside
//! the view, the outcome is undetermined there and nothing is reported; the
//! joint reading of Rule #2 is what catches such cases.

use std::collections::{BTreeMap, BTreeSet};

use crate::metamodel::{root_kind, RootKind};
use crate::model::{KindRef, MergedView, ModuleId, ResolvedSuite, TermRef, UserRelId};
use crate::parser::SourceSpan;
use crate::reporting::Code;

use super::conformance::relations_in_view;
use super::{Violation, Witness};

pub(super) fn visible(suite: &ResolvedSuite, view: &MergedView, m: ModuleId) -> bool {
    view.contains(m) || suite.module(m).level > view.level
}

fn rule1_in_view(suite: &ResolvedSuite, view: &MergedView) -> Vec<Violation> {
    let mut out = Vec::new();
    for m in &view.modules {
        let module = suite.module(*m);
        for t in &module.terms {
            check_term(suite, *t, &mut out);
        }
        for r in &module.relations {
            check_kind(suite, view, *r, &mut out);
        }
    }
    out.sort();
    out
}

fn check_term(suite: &ResolvedSuite, id: crate::model::UserTermId, out: &mut Vec<Violation>) {
    let term = suite.term(id);
    let me = TermRef::User(id);
    let name = suite.term_name(me);
    let level = suite.module(term.module).level;
    let Some(target) = term.enriches else {
        out.push(Violation::new(
            Code::E213,
            term.span.clone(),
            format!("term `{name}` has no enrichment link"),
            Witness::Enrichment {
                term: name,
                target: None,
            },
        ));
        return;
    };
    let target_name = suite.term_name(target);
    let target_level = suite.term_level(target);
    if Some(target_level) != level.above() {
        let expected = match level.above() {
            Some(l) => format!("a term at {l}"),
            None => "a term at a higher level, but FO has none".to_string(),
        };
        out.push(Violation::new(
            Code::E211,
            term.span.clone(),
            format!(
                "term `{name}` at {level} enriches `{target_name}` at {target_level}; expected {expected}"
            ),
            Witness::Enrichment {
                term: name.clone(),
                target: Some(target_name.clone()),
            },
        ));
    }
    if let Some(scope) = term.scope {
        let root = suite.enrichment_root(me);
        let inherited = suite.scope_facet(target);
        let problem = match root {
            Ok(root) if root_kind(root) != RootKind::Assertion => Some(format!(
                "term `{name}` declares scope {} but is rooted at {root}; scope applies to assertions only",
                scope.keyword()
            )),
            Ok(_) => match inherited {
                Some(up) if up != scope => Some(format!(
                    "term `{name}` declares scope {} but `{target_name}` already has scope {}",
                    scope.keyword(),
                    up.keyword()
                )),
                _ => None,
            },
            Err(_) => None,
        };
        if let Some(message) = problem {
            out.push(Violation::new(
                Code::E214,
                term.span.clone(),
                message,
                Witness::Enrichment {
                    term: name,
                    target: Some(target_name),
                },
            ));
        }
    }
}

fn check_kind(suite: &ResolvedSuite, view: &MergedView, id: UserRelId, out: &mut Vec<Violation>) {
    let rel = suite.relation(id);
    let name = suite.relation_name(id);
    let level = suite.module(rel.module).level;
    let report = |message: String, chain: Vec<String>, span: &SourceSpan| {
        Violation::new(
            Code::E212,
            span.clone(),
            message,
            Witness::KindChain { chain },
        )
    };
    match rel.kind {
        KindRef::Foundational(_) => {}
        KindRef::Term(t) => {
            let kind = suite.term_name(t);
            out.push(report(
                format!("relation `{name}` takes its kind from `{kind}`, which is a term, not a relationship"),
                vec![name.clone(), kind],
                &rel.span,
            ));
        }
        KindRef::Relation(r) if suite.module(suite.relation(r).module).level < level => {
            let kind = suite.relation_name(r);
            out.push(report(
                format!(
                    "relation `{name}` at {level} takes its kind from `{kind}` at a lower level"
                ),
                vec![name.clone(), kind],
                &rel.span,
            ));
        }
        KindRef::Relation(_) => {
            let mut chain = vec![name.clone()];
            let mut seen = BTreeSet::from([id]);
            let mut cur = rel.kind;
            while let KindRef::Relation(r) = cur {
                if !visible(suite, view, suite.relation(r).module) {
                    break;
                }
                chain.push(suite.relation_name(r));
                if r == id {
                    out.push(report(
                        format!(
                            "relation `{name}` has a kind chain that cycles back to itself and never reaches a foundational relationship"
                        ),
                        chain,
                        &rel.span,
                    ));
                    break;
                }
                if !seen.insert(r) {
                    break;
                }
                cur = suite.relation(r).kind;
            }
        }
    }
}

/// Rule #1 for one module on its own.
pub fn check_rule1_for(suite: &ResolvedSuite, module: ModuleId) -> Vec<Violation> {
    rule1_in_view(suite, &suite.merged_view(&[module]))
}

/// Rule #1 for every user module, each read on its own: enrichment targets
/// exactly one level up (E211), no missing links (E213), scope facets that
/// agree with the chain (E214), and relation kind chains that reach a
/// foundational relationship (E212).
pub fn check_rule1(suite: &ResolvedSuite) -> Vec<Violation> {
    let mut out: Vec<Violation> = suite
        .user_modules()
        .flat_map(|(id, _)| check_rule1_for(suite, id))
        .collect();
    out.sort();
    out
}

/// Groups user modules connected by same-level imports.
fn components(suite: &ResolvedSuite) -> Vec<Vec<ModuleId>> {
    let n = suite.modules().count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for (id, m) in suite.user_modules() {
        for (target, _) in &m.imports {
            let t = suite.module(*target);
            if t.is_builtin() || t.level != m.level {
                continue;
            }
            let (a, b) = (find(&mut parent, id.0), find(&mut parent, target.0));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<ModuleId>> = BTreeMap::new();
    for (id, _) in suite.user_modules() {
        let root = find(&mut parent, id.0);
        groups.entry(root).or_default().push(id);
    }
    groups.into_values().collect()
}

fn joint(suite: &ResolvedSuite, members: &[ModuleId], v: Violation) -> Violation {
    let modules: Vec<String> = members
        .iter()
        .map(|m| suite.module(*m).name.clone())
        .collect();
    let mut out = Violation::new(
        Code::E221,
        v.span,
        format!(
            "in the joint definition of {}: {}",
            modules.join(", "),
            v.message
        ),
        Witness::Joint {
            modules,
            inner: Box::new(v.witness),
        },
    );
    out.related = v.related;
    out
}

/// Rule #2 per import-connected component of same-level modules.
///
/// Rule #1 and relationship conformance are re-run on the merged view of the
/// component. Rule #1 violations also found when reading each module alone
/// keep their code; anything that only shows in the merged view becomes
/// E221. A component of one module therefore yields exactly its Rule #1
/// result.
pub fn check_rule2_components(suite: &ResolvedSuite) -> Vec<(Vec<ModuleId>, Vec<Violation>)> {
    components(suite)
        .into_iter()
        .map(|members| {
            let view = suite.merged_view(&members);
            let mut alone: BTreeSet<Violation> = BTreeSet::new();
            for m in &members {
                let single = suite.merged_view(&[*m]);
                alone.extend(rule1_in_view(suite, &single));
                alone.extend(relations_in_view(suite, &single));
            }
            let mut out = Vec::new();
            for v in rule1_in_view(suite, &view) {
                if alone.contains(&v) {
                    out.push(v);
                } else {
                    out.push(joint(suite, &members, v));
                }
            }
            for v in relations_in_view(suite, &view) {
                if !alone.contains(&v) {
                    out.push(joint(suite, &members, v));
                }
            }
            out.sort();
            (members, out)
        })
        .collect()
}

pub fn check_rule2(suite: &ResolvedSuite) -> Vec<Violation> {
    let mut out: Vec<Violation> = check_rule2_components(suite)
        .into_iter()
        .flat_map(|(_, v)| v)
        .collect();
    out.sort();
    out
}

fn rule3_violation(
    suite: &ResolvedSuite,
    what: &str,
    name: &str,
    ty: TermRef,
    span: &SourceSpan,
) -> Option<Violation> {
    let root = suite.enrichment_root(ty).ok()?;
    let ty_name = suite.term_name(ty);
    let code = match root_kind(root) {
        RootKind::Thing | RootKind::Assertion => return None,
        RootKind::ThingCategory => Code::E301,
        RootKind::Property | RootKind::Power => Code::E302,
    };
    let message = match code {
        Code::E301 => format!(
            "{what} `{name}` is typed by `{ty_name}`, a Thing Category; categories have no instances"
        ),
        _ => format!(
            "{what} `{name}` is typed by `{ty_name}`, rooted at {root}; properties and powers exist only as parts of world things"
        ),
    };
    Some(Violation::new(
        code,
        span.clone(),
        message,
        Witness::Individual {
            name: name.to_string(),
            ty: ty_name,
            root: root.to_string(),
        },
    ))
}

/// Rule #3: instance-level content must instantiate Thing- or
/// Assertion-rooted terms. Applies to individuals and to typed world things.
pub fn check_rule3(suite: &ResolvedSuite) -> Vec<Violation> {
    let mut out = Vec::new();
    for file in suite.instance_files() {
        for ind in &file.individuals {
            out.extend(rule3_violation(
                suite,
                "individual",
                &ind.name,
                ind.ty,
                &ind.span,
            ));
        }
        for world in &file.worlds {
            for thing in &world.things {
                if let Some(ty) = thing.instance_of {
                    out.extend(rule3_violation(
                        suite,
                        "thing",
                        &thing.name,
                        ty,
                        &thing.span,
                    ));
                }
            }
        }
    }
    out.sort();
    out
}
