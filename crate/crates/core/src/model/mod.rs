//! User-authored declarations and their resolved form.
//!
//! The declaration types here are what the parser produces: names are still
//! unbound [`QualifiedRef`]s. [`resolve`] binds them into a [`ResolvedSuite`]
//! that also contains the built-in `ThingFO` module at the FO level.

mod resolve;
mod world;

use std::cmp::Ordering;
use std::fmt;

pub use resolve::{
    resolve, KindRef, MergedView, ModuleId, ModuleInfo, ResolvedIndividual, ResolvedInstanceFile,
    ResolvedSuite, RootError, TermRef, UserRelId, UserRelation, UserTerm, UserTermId,
};
pub use world::{
    Fact as GroundFact, GroundPart, GroundThing, GroundWorld, PowerIdx, PropertyIdx, ThingIdx,
};

use crate::metamodel::ScopeFacet;
use crate::parser::SourceSpan;

/// Tiers of the layered architecture, from most to least abstract.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    /// Foundational
    FO,
    /// Core
    CO,
    /// Top-domain
    TDO,
    /// Low-domain
    LDO,
    /// Instance
    IO,
}

impl Level {
    pub const ALL: [Level; 5] = [Level::FO, Level::CO, Level::TDO, Level::LDO, Level::IO];

    /// Higher is more abstract: FO = 4 down to IO = 0.
    pub fn rank(self) -> u8 {
        match self {
            Level::FO => 4,
            Level::CO => 3,
            Level::TDO => 2,
            Level::LDO => 1,
            Level::IO => 0,
        }
    }

    /// The level immediately above, if any.
    pub fn above(self) -> Option<Level> {
        match self {
            Level::FO => None,
            Level::CO => Some(Level::FO),
            Level::TDO => Some(Level::CO),
            Level::LDO => Some(Level::TDO),
            Level::IO => Some(Level::LDO),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Level::FO => "FO",
            Level::CO => "CO",
            Level::TDO => "TDO",
            Level::LDO => "LDO",
            Level::IO => "IO",
        }
    }

    /// Levels a module can be declared at (everything but IO).
    pub fn from_module_keyword(s: &str) -> Option<Level> {
        match s {
            "FO" => Some(Level::FO),
            "CO" => Some(Level::CO),
            "TDO" => Some(Level::TDO),
            "LDO" => Some(Level::LDO),
            _ => None,
        }
    }
}

impl Ord for Level {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Level {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `Module.Name` or a bare `Name`. In world facts the same shape encodes
/// `thing.part` or a bare `thing`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QualifiedRef {
    pub qualifier: Option<String>,
    pub name: String,
    pub span: SourceSpan,
}

impl QualifiedRef {
    pub fn new(qualifier: Option<&str>, name: &str) -> Self {
        QualifiedRef {
            qualifier: qualifier.map(str::to_string),
            name: name.to_string(),
            span: SourceSpan::default(),
        }
    }
}

impl fmt::Display for QualifiedRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.qualifier {
            Some(q) => write!(f, "{q}.{}", self.name),
            None => f.write_str(&self.name),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologyModule {
    pub name: String,
    pub level: Level,
    pub imports: Vec<Import>,
    /// Terms and relations in source order.
    pub items: Vec<ModuleItem>,
    pub span: SourceSpan,
}

impl OntologyModule {
    pub fn terms(&self) -> impl Iterator<Item = &TermDef> {
        self.items.iter().filter_map(|i| match i {
            ModuleItem::Term(t) => Some(t),
            ModuleItem::Relation(_) => None,
        })
    }

    pub fn relations(&self) -> impl Iterator<Item = &RelationDecl> {
        self.items.iter().filter_map(|i| match i {
            ModuleItem::Relation(r) => Some(r),
            ModuleItem::Term(_) => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Import {
    pub module: String,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleItem {
    Term(TermDef),
    Relation(RelationDecl),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermDef {
    pub name: String,
    /// Always present in parsed input; `None` only for programmatically built terms.
    pub enriches: Option<QualifiedRef>,
    pub scope: Option<ScopeFacet>,
    pub attributes: Vec<Attribute>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attribute {
    pub key: String,
    pub value: String,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationDecl {
    pub name: String,
    pub from: QualifiedRef,
    pub to: QualifiedRef,
    pub kind: QualifiedRef,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub of_module: String,
    pub of_span: SourceSpan,
    pub items: Vec<InstanceItem>,
    pub span: SourceSpan,
}

impl InstanceFile {
    pub fn individuals(&self) -> impl Iterator<Item = &Individual> {
        self.items.iter().filter_map(|i| match i {
            InstanceItem::Individual(x) => Some(x),
            InstanceItem::World(_) => None,
        })
    }

    pub fn worlds(&self) -> impl Iterator<Item = &World> {
        self.items.iter().filter_map(|i| match i {
            InstanceItem::World(w) => Some(w),
            InstanceItem::Individual(_) => None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceItem {
    Individual(Individual),
    World(World),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual {
    pub name: String,
    pub ty: QualifiedRef,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct World {
    pub name: String,
    pub things: Vec<ThingNode>,
    pub facts: Vec<Fact>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThingNode {
    pub id: String,
    pub instance_of: Option<QualifiedRef>,
    pub properties: Vec<PartDecl>,
    pub powers: Vec<PartDecl>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartDecl {
    pub name: String,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub predicate: Predicate,
    pub subject: QualifiedRef,
    pub object: QualifiedRef,
    pub span: SourceSpan,
}

/// Ground fact predicates usable inside a `world` block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    Enables,
    ActsUpon,
    Interacts,
    BelongsTo,
    RelatesWith,
    IsSeenAs,
    Defines,
}

impl Predicate {
    pub const ALL: [Predicate; 7] = [
        Predicate::Enables,
        Predicate::ActsUpon,
        Predicate::Interacts,
        Predicate::BelongsTo,
        Predicate::RelatesWith,
        Predicate::IsSeenAs,
        Predicate::Defines,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Predicate::Enables => "enables",
            Predicate::ActsUpon => "actsUpon",
            Predicate::Interacts => "interacts",
            Predicate::BelongsTo => "belongsTo",
            Predicate::RelatesWith => "relatesWith",
            Predicate::IsSeenAs => "isSeenAs",
            Predicate::Defines => "defines",
        }
    }

    pub fn parse(s: &str) -> Option<Predicate> {
        Predicate::ALL.into_iter().find(|p| p.as_str() == s)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
