//! Conformance checks over a resolved suite: the architecture guidelines,
//! the three layering rules, the three world axioms, and relationship and
//! property conformance against the foundational catalog.
//!
//! Every check is a pure function returning [`Violation`]s; none of them
//! fails. [`validate_suite`] runs them all and returns a sorted list.

mod architecture;
mod axioms;
mod conformance;
mod rules;

use std::fmt;

use crate::model::{Predicate, ResolvedSuite};
use crate::parser::SourceSpan;
use crate::reporting::{Code, Diagnostic};

pub use architecture::check_architecture;
pub use axioms::{check_axioms, oracle_check_axioms};
pub use conformance::{check_property_conformance, check_relationship_conformance};
pub use rules::{check_rule1, check_rule1_for, check_rule2, check_rule2_components, check_rule3};

/// The normative statement a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    G1,
    G2,
    R1,
    R2,
    R3,
    A1,
    A2,
    A3,
    RelConformance,
    PropConformance,
    Cardinality,
}

impl RuleId {
    pub const ALL: [RuleId; 11] = [
        RuleId::G1,
        RuleId::G2,
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::A1,
        RuleId::A2,
        RuleId::A3,
        RuleId::RelConformance,
        RuleId::PropConformance,
        RuleId::Cardinality,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::G1 => "G1",
            RuleId::G2 => "G2",
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::A1 => "A1",
            RuleId::A2 => "A2",
            RuleId::A3 => "A3",
            RuleId::RelConformance => "RelConformance",
            RuleId::PropConformance => "PropConformance",
            RuleId::Cardinality => "Cardinality",
        }
    }

    pub fn parse(s: &str) -> Option<RuleId> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s))
    }

    /// Verbatim wording of the guideline, rule or axiom.
    pub fn wording(self) -> &'static str {
        match self {
            RuleId::G1 => "Guideline #1: A foundational ontology must be found at the upper or top level of the architecture.",
            RuleId::G2 => "Guideline #2: At the foundational level, only one foundational ontology must be found.",
            RuleId::R1 => "Rule #1: An ontology at a given level must guarantee a correspondence of its elements with the elements defined at the immediately higher level. This allows the terms and relationships of the lower-level ontologies to be semantically enriched by the terms and relationships of the higher-level ontologies.",
            RuleId::R2 => "Rule #2: Ontologies of the same level –except at the FO level– can be related to each other; if so, it must be guaranteed that their joint definition (as a whole) does not violate the principles of the next higher level.",
            RuleId::R3 => "Rule #3: At the Instance Ontological Level, only individuals of particular Things can be found.",
            RuleId::A1 => "A1: All Property of a Thing enables only its Powers. ∀t ∀prop ∀pow: Thing(t) ∧ Property(prop) ∧ Power(pow) ∧ partOf(prop, t) ∧ enables(prop, pow) → partOf(pow, t)",
            RuleId::A2 => "A2: The Power of a Thing only acts upon its Properties. ∀t ∀pow ∀prop: Thing(t) ∧ Power(pow) ∧ Property(prop) ∧ partOf(pow, t) ∧ actsUpon(pow, prop) → partOf(prop, t)",
            RuleId::A3 => "A3: The Power of a Thing only interacts with other Things. ∀t ∀pow: Thing(t) ∧ Power(pow) ∧ partOf(pow, t) → ¬interactsWithOther(pow, t)",
            RuleId::RelConformance => "Relationship conformance: every relation and world fact connects terms whose foundational roots match the relationship's domain and range.",
            RuleId::PropConformance => "Property conformance: term attributes are drawn from the properties of the term's foundational root.",
            RuleId::Cardinality => "Cardinality: a Power acts upon one or more Properties.",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The ground tuple or declaration that falsifies a rule.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    /// An axiom edge with the owners of both ends.
    Edge {
        predicate: Predicate,
        from: String,
        to: String,
        from_owner: String,
        to_owner: String,
    },
    /// A world fact.
    Fact {
        predicate: Predicate,
        from: String,
        to: String,
    },
    Module {
        module: String,
        level: String,
    },
    Import {
        from: String,
        from_level: String,
        to: String,
        to_level: String,
    },
    /// A term's enrichment link.
    Enrichment {
        term: String,
        target: Option<String>,
    },
    /// A relation's kind chain, starting at the relation itself.
    KindChain {
        chain: Vec<String>,
    },
    Relation {
        relation: String,
        end: String,
        term: String,
        root: String,
        required: String,
    },
    Individual {
        name: String,
        ty: String,
        root: String,
    },
    Attribute {
        term: String,
        key: String,
    },
    Power {
        world: String,
        power: String,
    },
    /// A violation that only shows when several modules are read together.
    Joint {
        modules: Vec<String>,
        inner: Box<Witness>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Edge {
                predicate,
                from,
                to,
                from_owner,
                to_owner,
            } => write!(
                f,
                "{predicate}({from}, {to}); owner({from}) = {from_owner}, owner({to}) = {to_owner}"
            ),
            Witness::Fact {
                predicate,
                from,
                to,
            } => write!(f, "{predicate}({from}, {to})"),
            Witness::Module { module, level } => write!(f, "ontology {module} at {level}"),
            Witness::Import {
                from,
                from_level,
                to,
                to_level,
            } => write!(f, "{from} ({from_level}) imports {to} ({to_level})"),
            Witness::Enrichment { term, target } => match target {
                Some(t) => write!(f, "{term} enriches {t}"),
                None => write!(f, "{term} has no enriches link"),
            },
            Witness::KindChain { chain } => f.write_str(&chain.join(" -> ")),
            Witness::Relation {
                relation,
                end,
                term,
                root,
                required,
            } => write!(
                f,
                "{relation}.{end} = {term}, root {root}; required {required}"
            ),
            Witness::Individual { name, ty, root } => write!(f, "{name} : {ty}, root {root}"),
            Witness::Attribute { term, key } => write!(f, "{term} {{ {key} }}"),
            Witness::Power { world, power } => write!(f, "world {world}: {power}"),
            Witness::Joint { modules, inner } => {
                write!(f, "[{}] {inner}", modules.join(", "))
            }
        }
    }
}

/// A rule breach. Ordered by primary span, then code.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub span: SourceSpan,
    pub code: Code,
    pub rule: RuleId,
    pub message: String,
    pub witness: Witness,
    /// Further spans involved, e.g. the declaration an import points at.
    pub related: Vec<SourceSpan>,
}

impl Violation {
    /// The rule is taken from the code catalog.
    pub fn new(code: Code, span: SourceSpan, message: impl Into<String>, witness: Witness) -> Self {
        let rule = code
            .info()
            .rule
            .expect("validator codes are tied to a rule");
        Violation {
            span,
            code,
            rule,
            message: message.into(),
            witness,
            related: Vec::new(),
        }
    }

    pub fn with_related(mut self, span: SourceSpan) -> Self {
        self.related.push(span);
        self
    }

    pub fn to_diagnostic(&self) -> Diagnostic {
        let mut d = Diagnostic::new(self.code, self.span.clone(), self.message.clone())
            .with_witness(self.witness.to_string());
        d.rule = Some(self.rule);
        d
    }
}

impl From<Violation> for Diagnostic {
    fn from(v: Violation) -> Diagnostic {
        v.to_diagnostic()
    }
}

/// Every check over the suite and all of its worlds, sorted and deduplicated.
pub fn validate_suite(suite: &ResolvedSuite) -> Vec<Violation> {
    let mut out = check_architecture(suite);
    out.extend(check_rule1(suite));
    out.extend(check_rule2(suite));
    out.extend(check_rule3(suite));
    out.extend(check_relationship_conformance(suite));
    out.extend(check_property_conformance(suite));
    for file in suite.instance_files() {
        for world in &file.worlds {
            out.extend(check_axioms(world));
        }
    }
    out.sort();
    out.dedup();
    out
}
