use std::collections::BTreeSet;

use crate::metamodel::{all_property_specs, properties_of, satisfies, RelationshipId, TermId};
use crate::model::{
    GroundWorld, KindRef, MergedView, Predicate, ResolvedSuite, TermRef, UserRelId,
};
use crate::reporting::Code;

use super::rules::visible;
use super::{Violation, Witness};

/// The foundational relationship a relation's kind chain ends at, if it can
/// be determined from the view.
fn foundational_kind(
    suite: &ResolvedSuite,
    view: &MergedView,
    id: UserRelId,
) -> Option<RelationshipId> {
    let mut seen = BTreeSet::from([id]);
    let mut cur = suite.relation(id).kind;
    loop {
        match cur {
            KindRef::Foundational(f) => return Some(f),
            KindRef::Term(_) => return None,
            KindRef::Relation(r) => {
                if !visible(suite, view, suite.relation(r).module) || !seen.insert(r) {
                    return None;
                }
                cur = suite.relation(r).kind;
            }
        }
    }
}

fn end_violation(
    suite: &ResolvedSuite,
    id: UserRelId,
    kind: RelationshipId,
    end: &str,
    term: TermRef,
    required: TermId,
) -> Option<Violation> {
    let root = suite.enrichment_root(term).ok()?;
    if satisfies(root, suite.scope_facet(term), required) {
        return None;
    }
    let relation = suite.relation_name(id);
    let term_name = suite.term_name(term);
    let role = if end == "from" { "domain" } else { "range" };
    Some(Violation::new(
        Code::E231,
        suite.relation(id).span.clone(),
        format!(
            "relation `{relation}` (kind {kind}) has `{end}` = `{term_name}`, rooted at {root}, but the {role} of {kind} is {required}"
        ),
        Witness::Relation {
            relation,
            end: end.to_string(),
            term: term_name,
            root: root.to_string(),
            required: required.to_string(),
        },
    ))
}

/// Domain/range conformance of every relation declared in the view.
pub(super) fn relations_in_view(suite: &ResolvedSuite, view: &MergedView) -> Vec<Violation> {
    let mut out = Vec::new();
    for id in view.relations(suite) {
        let Some(kind) = foundational_kind(suite, view, id) else {
            continue;
        };
        let rel = suite.relation(id);
        let spec = kind.spec();
        out.extend(end_violation(
            suite,
            id,
            kind,
            "from",
            rel.from,
            spec.domain,
        ));
        out.extend(end_violation(suite, id, kind, "to", rel.to, spec.range));
    }
    out.sort();
    out
}

fn world_violations(suite: &ResolvedSuite, world: &GroundWorld, out: &mut Vec<Violation>) {
    let thing = |t: crate::model::ThingIdx| world.thing(t).name.clone();
    let rooted = |t: TermRef, required: TermId| match suite.enrichment_root(t) {
        Ok(root) => Some((root, satisfies(root, suite.scope_facet(t), required))),
        Err(_) => None,
    };

    for f in &world.belongs_to {
        if let Some((root, false)) = rooted(f.to, TermId::ThingCategory) {
            let target = suite.term_name(f.to);
            out.push(Violation::new(
                Code::E232,
                f.span.clone(),
                format!(
                    "`{}` belongs to `{target}`, which is rooted at {root}; belongsTo targets must be Thing Categories",
                    thing(f.from)
                ),
                Witness::Fact {
                    predicate: Predicate::BelongsTo,
                    from: thing(f.from),
                    to: target,
                },
            ));
        }
    }
    for f in &world.defines {
        if let Some((root, false)) = rooted(f.to, TermId::Assertion) {
            let target = suite.term_name(f.to);
            out.push(Violation::new(
                Code::E233,
                f.span.clone(),
                format!(
                    "`{}` defines `{target}`, which is rooted at {root}; defines targets must be Assertions",
                    thing(f.from)
                ),
                Witness::Fact {
                    predicate: Predicate::Defines,
                    from: thing(f.from),
                    to: target,
                },
            ));
        }
    }
    for f in &world.relates_with {
        if f.from == f.to {
            out.push(Violation::new(
                Code::E234,
                f.span.clone(),
                format!(
                    "`{}` relates with itself; a Thing relates to other Things",
                    thing(f.from)
                ),
                Witness::Fact {
                    predicate: Predicate::RelatesWith,
                    from: thing(f.from),
                    to: thing(f.to),
                },
            ));
        }
    }
    if !world.acts_upon.is_empty() {
        let acting: BTreeSet<_> = world.acts_upon.iter().map(|f| f.from).collect();
        for (i, p) in world.powers.iter().enumerate() {
            let idx = crate::model::PowerIdx(i);
            if !acting.contains(&idx) {
                let power = world.power_label(idx);
                out.push(Violation::new(
                    Code::W301,
                    p.span.clone(),
                    format!(
                        "power `{power}` acts upon no property in world `{}`",
                        world.name
                    ),
                    Witness::Power {
                        world: world.name.clone(),
                        power,
                    },
                ));
            }
        }
    }
}

/// Relations must connect terms whose roots fit the foundational
/// relationship their kind chain ends at (E231). World facts are checked
/// against their relationship: belongsTo targets a Thing Category (E232),
/// defines targets an Assertion (E233), relatesWith is irreflexive (E234),
/// and in a world with any actsUpon facts every power should act upon
/// something (W301).
pub fn check_relationship_conformance(suite: &ResolvedSuite) -> Vec<Violation> {
    let mut out: Vec<Violation> = suite
        .user_modules()
        .flat_map(|(id, _)| relations_in_view(suite, &suite.merged_view(&[id])))
        .collect();
    for file in suite.instance_files() {
        for world in &file.worlds {
            world_violations(suite, world, &mut out);
        }
    }
    out.sort();
    out
}

/// Term attributes must be properties of the term's root or one of its
/// ancestors (W201); Thing-rooted terms should carry a description (W202).
pub fn check_property_conformance(suite: &ResolvedSuite) -> Vec<Violation> {
    let mut out = Vec::new();
    for (id, term) in suite.terms() {
        let me = TermRef::User(id);
        let Ok(root) = suite.enrichment_root(me) else {
            continue;
        };
        let name = suite.term_name(me);
        let allowed: Vec<&str> = properties_of(root).map(|p| p.key).collect();
        for a in &term.attributes {
            if allowed.contains(&a.key.as_str()) {
                continue;
            }
            let owners: Vec<String> = all_property_specs()
                .iter()
                .filter(|p| p.key == a.key)
                .map(|p| p.owner.to_string())
                .collect();
            let why = if owners.is_empty() {
                "it is not a known property".to_string()
            } else {
                format!("it belongs to {}", owners.join(", "))
            };
            out.push(Violation::new(
                Code::W201,
                a.span.clone(),
                format!(
                    "attribute `{}` on `{name}` (rooted at {root}) is not one of its properties ({}); {why}",
                    a.key,
                    allowed.join(", ")
                ),
                Witness::Attribute {
                    term: name.clone(),
                    key: a.key.clone(),
                },
            ));
        }
        if root == TermId::Thing && !term.attributes.iter().any(|a| a.key == "description") {
            out.push(Violation::new(
                Code::W202,
                term.span.clone(),
                format!("Thing-rooted term `{name}` has no `description`"),
                Witness::Attribute {
                    term: name,
                    key: "description".to_string(),
                },
            ));
        }
    }
    out.sort();
    out
}
