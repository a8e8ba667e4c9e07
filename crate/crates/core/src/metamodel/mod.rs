//! The built-in foundational level: ThingFO v1.3.
//!
//! Everything here is immutable `'static` data. The term taxonomy is a forest
//! with five roots (Thing, Property, Power, Thing Category, Assertion). All
//! fourteen assertion subtypes hang directly off Assertion; the particulars /
//! universals split is treated as a facet orthogonal to the aspect subtypes
//! (see [`ScopeFacet`]), so a user term enriches one aspect subtype and may
//! additionally declare a scope.
//!
//! The exact generalization sets of the original UML diagram are not
//! recoverable from the term definitions; the flat assertion taxonomy is a
//! reconstruction.

mod catalog;

use std::fmt;

pub use catalog::{PROPERTY_SPECS, RELATIONSHIP_SPECS, TERM_SPECS};

/// Name of the single built-in foundational module.
pub const FOUNDATIONAL_MODULE: &str = "ThingFO";

/// One identifier per foundational term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermId {
    Thing,
    Property,
    Power,
    ThingCategory,
    Assertion,
    AssertionOnParticulars,
    AssertionOnUniversals,
    ActionAssertion,
    AllotmentAssertion,
    BehaviorAssertion,
    ConstraintAssertion,
    IntentionAssertion,
    QualityAssertion,
    QuantityAssertion,
    RelationAssertion,
    SituationAssertion,
    StructureAssertion,
    SubstanceAssertion,
    TimeAssertion,
}

impl TermId {
    pub const ALL: [TermId; 19] = [
        TermId::Thing,
        TermId::Property,
        TermId::Power,
        TermId::ThingCategory,
        TermId::Assertion,
        TermId::AssertionOnParticulars,
        TermId::AssertionOnUniversals,
        TermId::ActionAssertion,
        TermId::AllotmentAssertion,
        TermId::BehaviorAssertion,
        TermId::ConstraintAssertion,
        TermId::IntentionAssertion,
        TermId::QualityAssertion,
        TermId::QuantityAssertion,
        TermId::RelationAssertion,
        TermId::SituationAssertion,
        TermId::StructureAssertion,
        TermId::SubstanceAssertion,
        TermId::TimeAssertion,
    ];

    /// Identifier used in the DSL, e.g. `ThingFO.ThingCategory`.
    pub fn ident(self) -> &'static str {
        match self {
            TermId::Thing => "Thing",
            TermId::Property => "Property",
            TermId::Power => "Power",
            TermId::ThingCategory => "ThingCategory",
            TermId::Assertion => "Assertion",
            TermId::AssertionOnParticulars => "AssertionOnParticulars",
            TermId::AssertionOnUniversals => "AssertionOnUniversals",
            TermId::ActionAssertion => "ActionAssertion",
            TermId::AllotmentAssertion => "AllotmentAssertion",
            TermId::BehaviorAssertion => "BehaviorAssertion",
            TermId::ConstraintAssertion => "ConstraintAssertion",
            TermId::IntentionAssertion => "IntentionAssertion",
            TermId::QualityAssertion => "QualityAssertion",
            TermId::QuantityAssertion => "QuantityAssertion",
            TermId::RelationAssertion => "RelationAssertion",
            TermId::SituationAssertion => "SituationAssertion",
            TermId::StructureAssertion => "StructureAssertion",
            TermId::SubstanceAssertion => "SubstanceAssertion",
            TermId::TimeAssertion => "TimeAssertion",
        }
    }

    pub fn from_ident(ident: &str) -> Option<TermId> {
        TermId::ALL.into_iter().find(|t| t.ident() == ident)
    }

    pub fn spec(self) -> &'static TermSpec {
        // TERM_SPECS is laid out in declaration order of the enum.
        &TERM_SPECS[self as usize]
    }

    pub fn display_name(self) -> &'static str {
        self.spec().display_name
    }
}

impl fmt::Display for TermId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ident())
    }
}

/// The five taxonomy roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootKind {
    Thing,
    Property,
    Power,
    ThingCategory,
    Assertion,
}

impl RootKind {
    pub fn term(self) -> TermId {
        match self {
            RootKind::Thing => TermId::Thing,
            RootKind::Property => TermId::Property,
            RootKind::Power => TermId::Power,
            RootKind::ThingCategory => TermId::ThingCategory,
            RootKind::Assertion => TermId::Assertion,
        }
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.term().ident())
    }
}

/// Particulars / universals facet of an assertion-rooted term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScopeFacet {
    Particulars,
    Universals,
}

impl ScopeFacet {
    pub fn keyword(self) -> &'static str {
        match self {
            ScopeFacet::Particulars => "particulars",
            ScopeFacet::Universals => "universals",
        }
    }

    pub fn from_keyword(s: &str) -> Option<ScopeFacet> {
        match s {
            "particulars" => Some(ScopeFacet::Particulars),
            "universals" => Some(ScopeFacet::Universals),
            _ => None,
        }
    }

    /// The scope implied by enriching one of the two scope subtypes directly.
    pub fn implied_by(term: TermId) -> Option<ScopeFacet> {
        match term {
            TermId::AssertionOnParticulars => Some(ScopeFacet::Particulars),
            TermId::AssertionOnUniversals => Some(ScopeFacet::Universals),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSpec {
    pub id: TermId,
    pub parent: Option<TermId>,
    pub display_name: &'static str,
    pub synonyms: &'static [&'static str],
    pub definition: &'static str,
    pub notes: &'static [&'static str],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertySpec {
    pub owner: TermId,
    /// Snake-case machine key used in term attribute blocks.
    pub key: &'static str,
    pub display_name: &'static str,
    pub definition: &'static str,
    pub notes: &'static [&'static str],
}

/// Which axiom restricts a relationship.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    A1,
    A2,
    A3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CardinalitySeverity {
    Error,
    Warning,
}

/// Multiplicity on the target end; `max == None` is unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Multiplicity {
    pub min: u32,
    pub max: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationshipId {
    ActsUpon,
    BelongsTo,
    DealsWithParticulars,
    DealsWithUniversals,
    Defines,
    Enables,
    Generalizes,
    InteractsWithOther,
    IsSeenAsOther,
    RelatesWithThing,
    RelatesWithCategory,
    RelatesWithAssertion,
}

impl RelationshipId {
    pub const ALL: [RelationshipId; 12] = [
        RelationshipId::ActsUpon,
        RelationshipId::BelongsTo,
        RelationshipId::DealsWithParticulars,
        RelationshipId::DealsWithUniversals,
        RelationshipId::Defines,
        RelationshipId::Enables,
        RelationshipId::Generalizes,
        RelationshipId::InteractsWithOther,
        RelationshipId::IsSeenAsOther,
        RelationshipId::RelatesWithThing,
        RelationshipId::RelatesWithCategory,
        RelationshipId::RelatesWithAssertion,
    ];

    pub fn spec(self) -> &'static RelationshipSpec {
        &RELATIONSHIP_SPECS[self as usize]
    }

    pub fn ident(self) -> &'static str {
        self.spec().ident
    }

    pub fn from_ident(ident: &str) -> Option<RelationshipId> {
        RelationshipId::ALL.into_iter().find(|r| r.ident() == ident)
    }
}

impl fmt::Display for RelationshipId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ident())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationshipSpec {
    pub id: RelationshipId,
    /// Display name as written in the relationship table ("acts upon").
    pub name: &'static str,
    /// Lower camel-case identifier used as `ThingFO.<ident>` in `kind` clauses.
    pub ident: &'static str,
    pub domain: TermId,
    pub range: TermId,
    pub multiplicity: Option<Multiplicity>,
    pub cardinality_severity: CardinalitySeverity,
    pub axioms: &'static [AxiomId],
    pub definition: &'static str,
    pub notes: &'static [&'static str],
}

pub fn all_term_specs() -> &'static [TermSpec] {
    &TERM_SPECS
}

pub fn all_property_specs() -> &'static [PropertySpec] {
    &PROPERTY_SPECS
}

pub fn all_relationship_specs() -> &'static [RelationshipSpec] {
    &RELATIONSHIP_SPECS
}

/// Reflexive-transitive closure of the parent link.
pub fn is_descendant(a: TermId, b: TermId) -> bool {
    let mut cur = Some(a);
    while let Some(t) = cur {
        if t == b {
            return true;
        }
        cur = t.spec().parent;
    }
    false
}

pub fn root_kind(id: TermId) -> RootKind {
    let mut t = id;
    while let Some(p) = t.spec().parent {
        t = p;
    }
    match t {
        TermId::Thing => RootKind::Thing,
        TermId::Property => RootKind::Property,
        TermId::Power => RootKind::Power,
        TermId::ThingCategory => RootKind::ThingCategory,
        TermId::Assertion => RootKind::Assertion,
        other => unreachable!("{other} has no parent but is not a root"),
    }
}

/// Properties owned by `term`, including those inherited from its ancestors.
pub fn properties_of(term: TermId) -> impl Iterator<Item = &'static PropertySpec> {
    PROPERTY_SPECS
        .iter()
        .filter(move |p| is_descendant(term, p.owner))
}

pub fn is_property_key(key: &str) -> bool {
    PROPERTY_SPECS.iter().any(|p| p.key == key)
}

/// Whether a term whose enrichment root is `root` (with effective scope
/// `scope`) satisfies the foundational type `required`.
///
/// The two scope subtypes are matched either directly or through the scope
/// facet of an assertion-rooted term.
pub fn satisfies(root: TermId, scope: Option<ScopeFacet>, required: TermId) -> bool {
    if is_descendant(root, required) {
        return true;
    }
    match ScopeFacet::implied_by(required) {
        Some(facet) => root_kind(root) == RootKind::Assertion && scope == Some(facet),
        None => false,
    }
}
