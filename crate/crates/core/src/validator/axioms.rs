//! The three world axioms. Each property and power has exactly one owner, so
//! A1 and A2 reduce to comparing the owners of an edge's two ends, and A3 to
//! checking that a power does not interact with its own owner.

use std::collections::BTreeSet;

use crate::model::{GroundWorld, Predicate};
use crate::parser::SourceSpan;
use crate::reporting::Code;

use super::{Violation, Witness};

fn axiom_violation(
    code: Code,
    predicate: Predicate,
    (from, from_owner): (String, String),
    (to, to_owner): (String, String),
    span: SourceSpan,
) -> Violation {
    let message = match code {
        Code::E311 => format!(
            "property `{from}` of `{from_owner}` enables power `{to}`, which belongs to `{to_owner}`"
        ),
        Code::E312 => format!(
            "power `{from}` of `{from_owner}` acts upon property `{to}`, which belongs to `{to_owner}`"
        ),
        _ => format!("power `{from}` of `{from_owner}` interacts with its own thing `{to}`"),
    };
    Violation::new(
        code,
        span,
        message,
        Witness::Edge {
            predicate,
            from,
            to,
            from_owner,
            to_owner,
        },
    )
}

/// Owner-equality evaluation, linear in the number of edges.
pub fn check_axioms(world: &GroundWorld) -> Vec<Violation> {
    let mut out = Vec::new();
    let thing_name = |t| world.thing(t).name.clone();
    for e in &world.enables {
        let (p, w) = (world.property(e.from), world.power(e.to));
        if p.owner != w.owner {
            out.push(axiom_violation(
                Code::E311,
                Predicate::Enables,
                (world.property_label(e.from), thing_name(p.owner)),
                (world.power_label(e.to), thing_name(w.owner)),
                e.span.clone(),
            ));
        }
    }
    for e in &world.acts_upon {
        let (w, p) = (world.power(e.from), world.property(e.to));
        if w.owner != p.owner {
            out.push(axiom_violation(
                Code::E312,
                Predicate::ActsUpon,
                (world.power_label(e.from), thing_name(w.owner)),
                (world.property_label(e.to), thing_name(p.owner)),
                e.span.clone(),
            ));
        }
    }
    for e in &world.interacts {
        let w = world.power(e.from);
        if w.owner == e.to {
            out.push(axiom_violation(
                Code::E313,
                Predicate::Interacts,
                (world.power_label(e.from), thing_name(w.owner)),
                (thing_name(e.to), thing_name(e.to)),
                e.span.clone(),
            ));
        }
    }
    out.sort();
    out
}

/// Brute-force evaluation of the axioms as first-order formulas over the
/// world read as plain name relations: unary `Thing`, `Property`, `Power`,
/// binary `partOf`, and one binary relation per fact predicate.
///
/// Every quantifier is instantiated over its whole domain and each fact that
/// satisfies an antecedent while falsifying the consequent yields one
/// violation. It shares nothing with [`check_axioms`] except the violation
/// constructor, and serves as its test oracle.
pub fn oracle_check_axioms(world: &GroundWorld) -> Vec<Violation> {
    // Thing(x), Property(x), Power(x) and partOf(part, thing) as name sets.
    let things: Vec<String> = world.things.iter().map(|t| t.name.clone()).collect();
    let properties: Vec<String> = (0..world.properties.len())
        .map(|i| world.property_label(crate::model::PropertyIdx(i)))
        .collect();
    let powers: Vec<String> = (0..world.powers.len())
        .map(|i| world.power_label(crate::model::PowerIdx(i)))
        .collect();
    let mut part_of: BTreeSet<(String, String)> = BTreeSet::new();
    for (i, p) in world.properties.iter().enumerate() {
        part_of.insert((properties[i].clone(), things[p.owner.0].clone()));
    }
    for (i, p) in world.powers.iter().enumerate() {
        part_of.insert((powers[i].clone(), things[p.owner.0].clone()));
    }
    let holds = |part: &str, thing: &str| part_of.contains(&(part.to_string(), thing.to_string()));
    let owner_of = |part: &str| -> String {
        things
            .iter()
            .find(|t| holds(part, t))
            .cloned()
            .unwrap_or_default()
    };

    let enables: Vec<(String, String, SourceSpan)> = world
        .enables
        .iter()
        .map(|e| {
            (
                properties[e.from.0].clone(),
                powers[e.to.0].clone(),
                e.span.clone(),
            )
        })
        .collect();
    let acts_upon: Vec<(String, String, SourceSpan)> = world
        .acts_upon
        .iter()
        .map(|e| {
            (
                powers[e.from.0].clone(),
                properties[e.to.0].clone(),
                e.span.clone(),
            )
        })
        .collect();
    let interacts: Vec<(String, String, SourceSpan)> = world
        .interacts
        .iter()
        .map(|e| {
            (
                powers[e.from.0].clone(),
                things[e.to.0].clone(),
                e.span.clone(),
            )
        })
        .collect();

    let mut out = Vec::new();

    // A1: partOf(prop, t) ∧ enables(prop, pow) → partOf(pow, t)
    for t in &things {
        for prop in &properties {
            for pow in &powers {
                for (a, b, span) in &enables {
                    if a == prop && b == pow && holds(prop, t) && !holds(pow, t) {
                        out.push(axiom_violation(
                            Code::E311,
                            Predicate::Enables,
                            (prop.clone(), t.clone()),
                            (pow.clone(), owner_of(pow)),
                            span.clone(),
                        ));
                    }
                }
            }
        }
    }

    // A2: partOf(pow, t) ∧ actsUpon(pow, prop) → partOf(prop, t)
    for t in &things {
        for pow in &powers {
            for prop in &properties {
                for (a, b, span) in &acts_upon {
                    if a == pow && b == prop && holds(pow, t) && !holds(prop, t) {
                        out.push(axiom_violation(
                            Code::E312,
                            Predicate::ActsUpon,
                            (pow.clone(), t.clone()),
                            (prop.clone(), owner_of(prop)),
                            span.clone(),
                        ));
                    }
                }
            }
        }
    }

    // A3: partOf(pow, t) → ¬interactsWithOther(pow, t), where
    // interactsWithOther(pow, t) holds when some fact interacts(pow, t) exists.
    for t in &things {
        for pow in &powers {
            for (a, b, span) in &interacts {
                if a == pow && b == t && holds(pow, t) {
                    out.push(axiom_violation(
                        Code::E313,
                        Predicate::Interacts,
                        (pow.clone(), t.clone()),
                        (t.clone(), t.clone()),
                        span.clone(),
                    ));
                }
            }
        }
    }

    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes(v: &[Violation]) -> Vec<Code> {
        v.iter().map(|x| x.code).collect()
    }

    #[test]
    fn clean_world() {
        let mut w = GroundWorld::new("w");
        let t1 = w.add_thing("t1");
        let t2 = w.add_thing("t2");
        let p1 = w.add_property(t1, "p1");
        let w1 = w.add_power(t1, "w1");
        w.enable(p1, w1);
        w.act_upon(w1, p1);
        w.interact(w1, t2);
        assert!(check_axioms(&w).is_empty());
        assert!(oracle_check_axioms(&w).is_empty());
    }

    #[test]
    fn enables_across_things() {
        let mut w = GroundWorld::new("w");
        let t1 = w.add_thing("t1");
        let t2 = w.add_thing("t2");
        let p1 = w.add_property(t1, "p1");
        let w2 = w.add_power(t2, "w2");
        w.enable(p1, w2);
        let found = check_axioms(&w);
        assert_eq!(codes(&found), vec![Code::E311]);
        assert_eq!(
            found[0].witness,
            Witness::Edge {
                predicate: Predicate::Enables,
                from: "t1.p1".into(),
                to: "t2.w2".into(),
                from_owner: "t1".into(),
                to_owner: "t2".into(),
            }
        );
        assert_eq!(found, oracle_check_axioms(&w));
    }

    #[test]
    fn acts_upon_across_things() {
        let mut w = GroundWorld::new("w");
        let t1 = w.add_thing("t1");
        let t2 = w.add_thing("t2");
        let p2 = w.add_property(t2, "p2");
        let w1 = w.add_power(t1, "w1");
        w.act_upon(w1, p2);
        assert_eq!(codes(&check_axioms(&w)), vec![Code::E312]);
        assert_eq!(check_axioms(&w), oracle_check_axioms(&w));
    }

    #[test]
    fn interacts_with_self() {
        let mut w = GroundWorld::new("w");
        let t1 = w.add_thing("t1");
        let w1 = w.add_power(t1, "w1");
        w.interact(w1, t1);
        assert_eq!(codes(&check_axioms(&w)), vec![Code::E313]);
        assert_eq!(check_axioms(&w), oracle_check_axioms(&w));
    }

    #[test]
    fn vacuous_cases() {
        let w = GroundWorld::new("empty");
        assert!(oracle_check_axioms(&w).is_empty());
        let mut w = GroundWorld::new("single");
        let t = w.add_thing("t");
        w.add_property(t, "p");
        w.add_power(t, "q");
        assert!(oracle_check_axioms(&w).is_empty());
        assert!(check_axioms(&w).is_empty());
    }

    #[test]
    fn repeated_edge_counts_twice() {
        let mut w = GroundWorld::new("w");
        let t1 = w.add_thing("t1");
        let w1 = w.add_power(t1, "w1");
        w.interact(w1, t1);
        w.interact(w1, t1);
        assert_eq!(check_axioms(&w).len(), 2);
        assert_eq!(oracle_check_axioms(&w).len(), 2);
    }
}
