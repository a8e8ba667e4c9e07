//! Name binding for a suite of modules and instance files.
//!
//! Qualified names are `Module.Name`; the built-in module is `ThingFO`, which
//! exposes the foundational terms (`ThingFO.Thing`) and relationships
//! (`ThingFO.enables`). A bare name is looked up in the current module first
//! and then in its imports. Terms and relations share one namespace per
//! module.

use std::collections::{BTreeMap, BTreeSet};

use crate::metamodel::{RelationshipId, ScopeFacet, TermId, FOUNDATIONAL_MODULE};
use crate::parser::SourceSpan;
use crate::reporting::{Code, Diagnostic, SuiteSummary};

use super::world::{
    Fact as GroundFact, GroundPart, GroundThing, GroundWorld, PowerIdx, PropertyIdx, ThingIdx,
};
use super::{Attribute, InstanceFile, Level, OntologyModule, Predicate, QualifiedRef, World};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UserTermId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UserRelId(pub usize);

/// A bound reference to a term, foundational or user-declared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TermRef {
    Foundational(TermId),
    User(UserTermId),
}

/// What a relation's `kind` clause bound to. Only the first two continue a
/// relationship chain; a term is a dead end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KindRef {
    Foundational(RelationshipId),
    Relation(UserRelId),
    Term(TermRef),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleInfo {
    pub name: String,
    pub level: Level,
    pub imports: Vec<(ModuleId, SourceSpan)>,
    pub terms: Vec<UserTermId>,
    pub relations: Vec<UserRelId>,
    /// `None` for the built-in module.
    pub span: Option<SourceSpan>,
}

impl ModuleInfo {
    pub fn is_builtin(&self) -> bool {
        self.span.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UserTerm {
    pub module: ModuleId,
    pub name: String,
    pub enriches: Option<TermRef>,
    pub scope: Option<ScopeFacet>,
    pub attributes: Vec<Attribute>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UserRelation {
    pub module: ModuleId,
    pub name: String,
    pub from: TermRef,
    pub to: TermRef,
    pub kind: KindRef,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedIndividual {
    pub name: String,
    pub ty: TermRef,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedInstanceFile {
    pub of_module: ModuleId,
    pub individuals: Vec<ResolvedIndividual>,
    pub worlds: Vec<GroundWorld>,
    pub span: SourceSpan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootError {
    /// The chain revisits a term.
    Cycle(UserTermId),
    /// A term on the chain has no `enriches` link.
    Missing(UserTermId),
}

/// Fully bound suite. Module 0 is always the built-in `ThingFO`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedSuite {
    modules: Vec<ModuleInfo>,
    terms: Vec<UserTerm>,
    relations: Vec<UserRelation>,
    instances: Vec<ResolvedInstanceFile>,
    by_name: BTreeMap<String, ModuleId>,
}

/// Same-level modules considered together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedView {
    pub modules: Vec<ModuleId>,
    pub level: Level,
}

impl MergedView {
    pub fn contains(&self, m: ModuleId) -> bool {
        self.modules.binary_search(&m).is_ok()
    }

    pub fn terms<'a>(&'a self, suite: &'a ResolvedSuite) -> impl Iterator<Item = UserTermId> + 'a {
        self.modules
            .iter()
            .flat_map(move |m| suite.module(*m).terms.iter().copied())
    }

    pub fn relations<'a>(
        &'a self,
        suite: &'a ResolvedSuite,
    ) -> impl Iterator<Item = UserRelId> + 'a {
        self.modules
            .iter()
            .flat_map(move |m| suite.module(*m).relations.iter().copied())
    }

    /// `Module.Term` names of every term in the view, in module order.
    pub fn qualified_term_names(&self, suite: &ResolvedSuite) -> Vec<String> {
        self.terms(suite)
            .map(|t| suite.term_name(TermRef::User(t)))
            .collect()
    }
}

impl ResolvedSuite {
    fn with_builtin() -> Self {
        let mut by_name = BTreeMap::new();
        by_name.insert(FOUNDATIONAL_MODULE.to_string(), ModuleId(0));
        ResolvedSuite {
            modules: vec![ModuleInfo {
                name: FOUNDATIONAL_MODULE.to_string(),
                level: Level::FO,
                imports: Vec::new(),
                terms: Vec::new(),
                relations: Vec::new(),
                span: None,
            }],
            terms: Vec::new(),
            relations: Vec::new(),
            instances: Vec::new(),
            by_name,
        }
    }

    pub fn builtin(&self) -> ModuleId {
        ModuleId(0)
    }

    pub fn modules(&self) -> impl Iterator<Item = (ModuleId, &ModuleInfo)> {
        self.modules
            .iter()
            .enumerate()
            .map(|(i, m)| (ModuleId(i), m))
    }

    pub fn user_modules(&self) -> impl Iterator<Item = (ModuleId, &ModuleInfo)> {
        self.modules().skip(1)
    }

    pub fn module(&self, id: ModuleId) -> &ModuleInfo {
        &self.modules[id.0]
    }

    pub fn module_by_name(&self, name: &str) -> Option<ModuleId> {
        self.by_name.get(name).copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (UserTermId, &UserTerm)> {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, t)| (UserTermId(i), t))
    }

    pub fn term(&self, id: UserTermId) -> &UserTerm {
        &self.terms[id.0]
    }

    pub fn relations(&self) -> impl Iterator<Item = (UserRelId, &UserRelation)> {
        self.relations
            .iter()
            .enumerate()
            .map(|(i, r)| (UserRelId(i), r))
    }

    pub fn relation(&self, id: UserRelId) -> &UserRelation {
        &self.relations[id.0]
    }

    pub fn instance_files(&self) -> &[ResolvedInstanceFile] {
        &self.instances
    }

    pub fn term_module(&self, t: TermRef) -> ModuleId {
        match t {
            TermRef::Foundational(_) => self.builtin(),
            TermRef::User(id) => self.term(id).module,
        }
    }

    pub fn term_level(&self, t: TermRef) -> Level {
        self.module(self.term_module(t)).level
    }

    pub fn term_name(&self, t: TermRef) -> String {
        match t {
            TermRef::Foundational(id) => format!("{FOUNDATIONAL_MODULE}.{id}"),
            TermRef::User(id) => {
                let term = self.term(id);
                format!("{}.{}", self.module(term.module).name, term.name)
            }
        }
    }

    pub fn relation_name(&self, r: UserRelId) -> String {
        let rel = self.relation(r);
        format!("{}.{}", self.module(rel.module).name, rel.name)
    }

    pub fn kind_name(&self, k: KindRef) -> String {
        match k {
            KindRef::Foundational(id) => format!("{FOUNDATIONAL_MODULE}.{id}"),
            KindRef::Relation(r) => self.relation_name(r),
            KindRef::Term(t) => self.term_name(t),
        }
    }

    pub fn kind_module(&self, k: KindRef) -> ModuleId {
        match k {
            KindRef::Foundational(_) => self.builtin(),
            KindRef::Relation(r) => self.relation(r).module,
            KindRef::Term(t) => self.term_module(t),
        }
    }

    /// Follows `enriches` links up to the foundational term the chain ends at.
    pub fn enrichment_root(&self, t: TermRef) -> Result<TermId, RootError> {
        let mut seen = BTreeSet::new();
        let mut cur = t;
        loop {
            match cur {
                TermRef::Foundational(id) => return Ok(id),
                TermRef::User(id) => {
                    if !seen.insert(id) {
                        return Err(RootError::Cycle(id));
                    }
                    match self.term(id).enriches {
                        Some(next) => cur = next,
                        None => return Err(RootError::Missing(id)),
                    }
                }
            }
        }
    }

    /// The nearest scope facet declared along the enrichment chain, or the
    /// one implied by the foundational term it ends at.
    pub fn scope_facet(&self, t: TermRef) -> Option<ScopeFacet> {
        let mut seen = BTreeSet::new();
        let mut cur = t;
        loop {
            match cur {
                TermRef::Foundational(id) => return ScopeFacet::implied_by(id),
                TermRef::User(id) => {
                    if !seen.insert(id) {
                        return None;
                    }
                    let term = self.term(id);
                    if term.scope.is_some() {
                        return term.scope;
                    }
                    cur = term.enriches?;
                }
            }
        }
    }

    /// Union of the given same-level modules. Declarations keep their
    /// qualified identity; nothing is renamed.
    pub fn merged_view(&self, modules: &[ModuleId]) -> MergedView {
        let mut ids: Vec<ModuleId> = modules.to_vec();
        ids.sort();
        ids.dedup();
        let level = ids
            .first()
            .map(|m| self.module(*m).level)
            .unwrap_or(Level::FO);
        debug_assert!(ids.iter().all(|m| self.module(*m).level == level));
        MergedView {
            modules: ids,
            level,
        }
    }

    pub fn summary(&self) -> SuiteSummary {
        let mut modules = BTreeMap::new();
        for (_, m) in self.modules() {
            *modules.entry(m.level).or_insert(0) += 1;
        }
        SuiteSummary {
            modules,
            terms: self.terms.len(),
            relations: self.relations.len(),
            individuals: self.instances.iter().map(|i| i.individuals.len()).sum(),
            worlds: self.instances.iter().map(|i| i.worlds.len()).sum(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Decl {
    Term(TermRef),
    Relation(UserRelId),
    FoundationalRel(RelationshipId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ArgKind {
    Thing,
    Property,
    Power,
    Term,
}

#[derive(Debug, Clone, Copy)]
enum Arg {
    Thing(ThingIdx),
    Property(PropertyIdx),
    Power(PowerIdx),
    Term(TermRef),
}

struct Resolver {
    suite: ResolvedSuite,
    /// Per-module namespace of user declarations.
    decls: Vec<BTreeMap<String, Decl>>,
    diags: Vec<Diagnostic>,
}

fn sort_key(span: &SourceSpan) -> (&str, u32, u32) {
    (&span.file, span.start_line, span.start_col)
}

/// Binds every name in the given modules and instance files.
///
/// Inputs are ordered by source position first, so the result does not
/// depend on the order they are passed in. Any unresolved, ambiguous or
/// duplicate name, self-import, import cycle or enrichment cycle makes the
/// whole resolution fail with one diagnostic per problem.
pub fn resolve(
    modules: &[OntologyModule],
    instances: &[InstanceFile],
) -> Result<ResolvedSuite, Vec<Diagnostic>> {
    let mut modules: Vec<&OntologyModule> = modules.iter().collect();
    modules.sort_by(|a, b| sort_key(&a.span).cmp(&sort_key(&b.span)));
    let mut instances: Vec<&InstanceFile> = instances.iter().collect();
    instances.sort_by(|a, b| sort_key(&a.span).cmp(&sort_key(&b.span)));

    let mut r = Resolver {
        suite: ResolvedSuite::with_builtin(),
        decls: vec![BTreeMap::new()],
        diags: Vec::new(),
    };

    let registered = r.register_modules(&modules);
    for (id, m) in &registered {
        r.bind_imports(*id, m);
    }
    r.check_import_cycles();
    for (id, m) in &registered {
        r.bind_declarations(*id, m);
    }
    r.check_enrichment_cycles();
    for file in &instances {
        r.resolve_instances(file);
    }

    if r.diags.iter().any(Diagnostic::is_error) {
        let mut diags = r.diags;
        diags.sort();
        diags.dedup();
        Err(diags)
    } else {
        Ok(r.suite)
    }
}

impl Resolver {
    fn error(&mut self, code: Code, span: &SourceSpan, message: String) {
        self.diags
            .push(Diagnostic::new(code, span.clone(), message));
    }

    fn register_modules<'a>(
        &mut self,
        modules: &[&'a OntologyModule],
    ) -> Vec<(ModuleId, &'a OntologyModule)> {
        let mut registered = Vec::new();
        for m in modules {
            if let Some(prev) = self.suite.by_name.get(&m.name) {
                let where_ = match &self.suite.module(*prev).span {
                    Some(span) => format!(" (first defined at {span})"),
                    None => " (built-in foundational module)".to_string(),
                };
                self.error(
                    Code::E102,
                    &m.span,
                    format!("duplicate module `{}`{where_}", m.name),
                );
                continue;
            }
            let id = ModuleId(self.suite.modules.len());
            self.suite.by_name.insert(m.name.clone(), id);
            self.suite.modules.push(ModuleInfo {
                name: m.name.clone(),
                level: m.level,
                imports: Vec::new(),
                terms: Vec::new(),
                relations: Vec::new(),
                span: Some(m.span.clone()),
            });
            self.decls.push(BTreeMap::new());
            registered.push((id, *m));
        }

        // Declare every name before binding anything so forward and
        // cross-module references work.
        for (id, m) in &registered {
            let mut first_seen: BTreeMap<&str, &SourceSpan> = BTreeMap::new();
            for t in m.terms() {
                if let Some(prev) = first_seen.get(t.name.as_str()) {
                    let msg = format!(
                        "duplicate definition of `{}.{}` (first defined at {prev})",
                        m.name, t.name
                    );
                    self.error(Code::E102, &t.span, msg);
                    continue;
                }
                first_seen.insert(&t.name, &t.span);
                self.check_duplicate_attributes(&m.name, t);
                let tid = UserTermId(self.suite.terms.len());
                self.suite.terms.push(UserTerm {
                    module: *id,
                    name: t.name.clone(),
                    enriches: None,
                    scope: t.scope,
                    attributes: t.attributes.clone(),
                    span: t.span.clone(),
                });
                self.suite.modules[id.0].terms.push(tid);
                self.decls[id.0].insert(t.name.clone(), Decl::Term(TermRef::User(tid)));
            }
            for rel in m.relations() {
                if let Some(prev) = first_seen.get(rel.name.as_str()) {
                    let msg = format!(
                        "duplicate definition of `{}.{}` (first defined at {prev})",
                        m.name, rel.name
                    );
                    self.error(Code::E102, &rel.span, msg);
                    continue;
                }
                first_seen.insert(&rel.name, &rel.span);
                let rid = UserRelId(self.suite.relations.len());
                self.suite.relations.push(UserRelation {
                    module: *id,
                    name: rel.name.clone(),
                    from: TermRef::Foundational(TermId::Thing),
                    to: TermRef::Foundational(TermId::Thing),
                    kind: KindRef::Foundational(RelationshipId::RelatesWithThing),
                    span: rel.span.clone(),
                });
                self.suite.modules[id.0].relations.push(rid);
                self.decls[id.0].insert(rel.name.clone(), Decl::Relation(rid));
            }
        }
        registered
    }

    fn check_duplicate_attributes(&mut self, module: &str, t: &super::TermDef) {
        let mut keys = BTreeSet::new();
        for a in &t.attributes {
            if !keys.insert(a.key.as_str()) {
                self.error(
                    Code::E102,
                    &a.span,
                    format!("attribute `{}` given twice on `{module}.{}`", a.key, t.name),
                );
            }
        }
    }

    fn bind_imports(&mut self, id: ModuleId, m: &OntologyModule) {
        for imp in &m.imports {
            if imp.module == m.name {
                self.error(
                    Code::E104,
                    &imp.span,
                    format!("module `{}` imports itself", m.name),
                );
                continue;
            }
            match self.suite.module_by_name(&imp.module) {
                Some(target) => self.suite.modules[id.0]
                    .imports
                    .push((target, imp.span.clone())),
                None => self.error(
                    Code::E101,
                    &imp.span,
                    format!("unresolved import: no module named `{}`", imp.module),
                ),
            }
        }
    }

    fn check_import_cycles(&mut self) {
        let n = self.suite.modules.len();
        let edges: Vec<Vec<usize>> = self
            .suite
            .modules
            .iter()
            .map(|m| m.imports.iter().map(|(t, _)| t.0).collect())
            .collect();
        for scc in strongly_connected(n, &edges) {
            if scc.len() < 2 {
                continue;
            }
            let members: BTreeSet<usize> = scc.iter().copied().collect();
            let first = *members.iter().next().expect("non-empty component");
            let names: Vec<&str> = members
                .iter()
                .map(|i| self.suite.modules[*i].name.as_str())
                .collect();
            let span = self.suite.modules[first]
                .imports
                .iter()
                .find(|(t, _)| members.contains(&t.0))
                .map(|(_, s)| s.clone())
                .expect("cycle member imports another member");
            let msg = format!("import cycle between modules {}", names.join(", "));
            self.error(Code::E103, &span, msg);
        }
    }

    fn lookup(&self, ctx: ModuleId, r: &QualifiedRef) -> Result<Decl, Diagnostic> {
        match &r.qualifier {
            Some(q) if q == FOUNDATIONAL_MODULE => {
                if let Some(t) = TermId::from_ident(&r.name) {
                    Ok(Decl::Term(TermRef::Foundational(t)))
                } else if let Some(rel) = RelationshipId::from_ident(&r.name) {
                    Ok(Decl::FoundationalRel(rel))
                } else {
                    Err(Diagnostic::new(
                        Code::E101,
                        r.span.clone(),
                        format!("unresolved reference `{r}`: {FOUNDATIONAL_MODULE} has no term or relationship `{}`", r.name),
                    ))
                }
            }
            Some(q) => {
                let Some(m) = self.suite.module_by_name(q) else {
                    return Err(Diagnostic::new(
                        Code::E101,
                        r.span.clone(),
                        format!("unresolved reference `{r}`: no module named `{q}`"),
                    ));
                };
                self.decls[m.0].get(&r.name).copied().ok_or_else(|| {
                    Diagnostic::new(
                        Code::E101,
                        r.span.clone(),
                        format!(
                            "unresolved reference `{r}`: module `{q}` declares no `{}`",
                            r.name
                        ),
                    )
                })
            }
            None => {
                if ctx == self.suite.builtin() {
                    if let Some(t) = TermId::from_ident(&r.name) {
                        return Ok(Decl::Term(TermRef::Foundational(t)));
                    }
                }
                if let Some(d) = self.decls[ctx.0].get(&r.name) {
                    return Ok(*d);
                }
                let mut found: Vec<(ModuleId, Decl)> = Vec::new();
                for (imp, _) in &self.suite.module(ctx).imports {
                    if let Some(d) = self.decls[imp.0].get(&r.name) {
                        if !found.iter().any(|(m, _)| m == imp) {
                            found.push((*imp, *d));
                        }
                    }
                }
                match found.as_slice() {
                    [(_, d)] => Ok(*d),
                    [] => Err(Diagnostic::new(
                        Code::E101,
                        r.span.clone(),
                        format!(
                            "unresolved reference `{r}` in module `{}`",
                            self.suite.module(ctx).name
                        ),
                    )),
                    many => {
                        let names: Vec<String> = many
                            .iter()
                            .map(|(m, _)| format!("{}.{}", self.suite.module(*m).name, r.name))
                            .collect();
                        Err(Diagnostic::new(
                            Code::E101,
                            r.span.clone(),
                            format!("ambiguous reference `{r}`: could be {}", names.join(" or ")),
                        ))
                    }
                }
            }
        }
    }

    fn lookup_term(&mut self, ctx: ModuleId, r: &QualifiedRef) -> Option<TermRef> {
        match self.lookup(ctx, r) {
            Ok(Decl::Term(t)) => Some(t),
            Ok(_) => {
                self.error(
                    Code::E101,
                    &r.span,
                    format!("`{r}` names a relationship where a term is expected"),
                );
                None
            }
            Err(d) => {
                self.diags.push(d);
                None
            }
        }
    }

    fn bind_declarations(&mut self, id: ModuleId, m: &OntologyModule) {
        for t in m.terms() {
            let Some(Decl::Term(TermRef::User(tid))) = self.decls[id.0].get(&t.name).copied()
            else {
                continue;
            };
            // Skip later duplicates: only the registered declaration is bound.
            if self.suite.term(tid).span != t.span {
                continue;
            }
            if let Some(target) = &t.enriches {
                let bound = self.lookup_term(id, target);
                self.suite.terms[tid.0].enriches = bound;
            }
        }
        for rel in m.relations() {
            let Some(Decl::Relation(rid)) = self.decls[id.0].get(&rel.name).copied() else {
                continue;
            };
            if self.suite.relation(rid).span != rel.span {
                continue;
            }
            let from = self.lookup_term(id, &rel.from);
            let to = self.lookup_term(id, &rel.to);
            let kind = match self.lookup(id, &rel.kind) {
                Ok(Decl::Term(t)) => Some(KindRef::Term(t)),
                Ok(Decl::Relation(r)) => Some(KindRef::Relation(r)),
                Ok(Decl::FoundationalRel(r)) => Some(KindRef::Foundational(r)),
                Err(d) => {
                    self.diags.push(d);
                    None
                }
            };
            let entry = &mut self.suite.relations[rid.0];
            if let (Some(from), Some(to), Some(kind)) = (from, to, kind) {
                entry.from = from;
                entry.to = to;
                entry.kind = kind;
            }
        }
    }

    fn check_enrichment_cycles(&mut self) {
        let mut reported: BTreeSet<UserTermId> = BTreeSet::new();
        for i in 0..self.suite.terms.len() {
            let start = UserTermId(i);
            let mut path = Vec::new();
            let mut cur = Some(TermRef::User(start));
            while let Some(TermRef::User(id)) = cur {
                if let Some(pos) = path.iter().position(|p| *p == id) {
                    let cycle: BTreeSet<UserTermId> = path[pos..].iter().copied().collect();
                    if cycle.is_disjoint(&reported) {
                        let first = *cycle.iter().next().expect("non-empty cycle");
                        let names: Vec<String> = cycle
                            .iter()
                            .map(|t| self.suite.term_name(TermRef::User(*t)))
                            .collect();
                        let span = self.suite.term(first).span.clone();
                        self.error(
                            Code::E105,
                            &span,
                            format!("enrichment cycle through {}", names.join(" -> ")),
                        );
                        reported.extend(cycle);
                    }
                    break;
                }
                path.push(id);
                cur = self.suite.term(id).enriches;
            }
        }
    }

    fn resolve_instances(&mut self, file: &InstanceFile) {
        let ctx = match self.suite.module_by_name(&file.of_module) {
            Some(m) => m,
            None => {
                self.error(
                    Code::E101,
                    &file.of_span,
                    format!("instances attach to unknown module `{}`", file.of_module),
                );
                self.suite.builtin()
            }
        };

        let mut individuals = Vec::new();
        let mut names: BTreeMap<&str, &SourceSpan> = BTreeMap::new();
        for ind in file.individuals() {
            if let Some(prev) = names.get(ind.name.as_str()) {
                let msg = format!(
                    "duplicate individual `{}` (first defined at {prev})",
                    ind.name
                );
                self.error(Code::E102, &ind.span, msg);
                continue;
            }
            names.insert(&ind.name, &ind.span);
            if let Some(ty) = self.lookup_term(ctx, &ind.ty) {
                individuals.push(ResolvedIndividual {
                    name: ind.name.clone(),
                    ty,
                    span: ind.span.clone(),
                });
            }
        }

        let mut worlds = Vec::new();
        let mut world_names: BTreeMap<&str, &SourceSpan> = BTreeMap::new();
        for w in file.worlds() {
            if let Some(prev) = world_names.get(w.name.as_str()) {
                let msg = format!("duplicate world `{}` (first defined at {prev})", w.name);
                self.error(Code::E102, &w.span, msg);
                continue;
            }
            world_names.insert(&w.name, &w.span);
            worlds.push(self.build_world(ctx, w));
        }

        self.suite.instances.push(ResolvedInstanceFile {
            of_module: ctx,
            individuals,
            worlds,
            span: file.span.clone(),
        });
    }

    fn build_world(&mut self, ctx: ModuleId, w: &World) -> GroundWorld {
        let mut world = GroundWorld::new(w.name.clone());
        world.span = w.span.clone();
        let mut things: BTreeMap<&str, ThingIdx> = BTreeMap::new();
        let mut parts: BTreeMap<(ThingIdx, &str), Arg> = BTreeMap::new();

        for node in &w.things {
            if things.contains_key(node.id.as_str()) {
                let msg = format!("duplicate thing `{}` in world `{}`", node.id, w.name);
                self.error(Code::E102, &node.span, msg);
                continue;
            }
            let instance_of = match &node.instance_of {
                Some(r) => self.lookup_term(ctx, r),
                None => None,
            };
            let idx = ThingIdx(world.things.len());
            world.things.push(GroundThing {
                name: node.id.clone(),
                instance_of,
                span: node.span.clone(),
            });
            things.insert(&node.id, idx);

            for p in &node.properties {
                if parts.contains_key(&(idx, p.name.as_str())) {
                    let msg = format!("duplicate part `{}.{}`", node.id, p.name);
                    self.error(Code::E102, &p.span, msg);
                    continue;
                }
                world.properties.push(GroundPart {
                    name: p.name.clone(),
                    owner: idx,
                    span: p.span.clone(),
                });
                parts.insert(
                    (idx, &p.name),
                    Arg::Property(PropertyIdx(world.properties.len() - 1)),
                );
            }
            for p in &node.powers {
                if parts.contains_key(&(idx, p.name.as_str())) {
                    let msg = format!("duplicate part `{}.{}`", node.id, p.name);
                    self.error(Code::E102, &p.span, msg);
                    continue;
                }
                world.powers.push(GroundPart {
                    name: p.name.clone(),
                    owner: idx,
                    span: p.span.clone(),
                });
                parts.insert((idx, &p.name), Arg::Power(PowerIdx(world.powers.len() - 1)));
            }
        }

        for fact in &w.facts {
            use ArgKind as K;
            let (sk, ok) = match fact.predicate {
                Predicate::Enables => (K::Property, K::Power),
                Predicate::ActsUpon => (K::Power, K::Property),
                Predicate::Interacts => (K::Power, K::Thing),
                Predicate::BelongsTo => (K::Thing, K::Term),
                Predicate::RelatesWith => (K::Thing, K::Thing),
                Predicate::IsSeenAs => (K::Property, K::Thing),
                Predicate::Defines => (K::Thing, K::Term),
            };
            let s = self.world_arg(ctx, &things, &parts, fact.predicate, sk, &fact.subject);
            let o = self.world_arg(ctx, &things, &parts, fact.predicate, ok, &fact.object);
            let (Some(s), Some(o)) = (s, o) else { continue };
            let span = fact.span.clone();
            match (s, o) {
                (Arg::Property(p), Arg::Power(q)) => world.enables.push(GroundFact {
                    from: p,
                    to: q,
                    span,
                }),
                (Arg::Power(p), Arg::Property(q)) => world.acts_upon.push(GroundFact {
                    from: p,
                    to: q,
                    span,
                }),
                (Arg::Power(p), Arg::Thing(t)) => world.interacts.push(GroundFact {
                    from: p,
                    to: t,
                    span,
                }),
                (Arg::Property(p), Arg::Thing(t)) => world.is_seen_as.push(GroundFact {
                    from: p,
                    to: t,
                    span,
                }),
                (Arg::Thing(a), Arg::Thing(b)) => world.relates_with.push(GroundFact {
                    from: a,
                    to: b,
                    span,
                }),
                (Arg::Thing(a), Arg::Term(t)) => match fact.predicate {
                    Predicate::BelongsTo => world.belongs_to.push(GroundFact {
                        from: a,
                        to: t,
                        span,
                    }),
                    _ => world.defines.push(GroundFact {
                        from: a,
                        to: t,
                        span,
                    }),
                },
                _ => unreachable!("argument kinds are checked by world_arg"),
            }
        }
        world
    }

    fn world_arg(
        &mut self,
        ctx: ModuleId,
        things: &BTreeMap<&str, ThingIdx>,
        parts: &BTreeMap<(ThingIdx, &str), Arg>,
        pred: Predicate,
        want: ArgKind,
        r: &QualifiedRef,
    ) -> Option<Arg> {
        let wrong_kind = |this: &mut Self, found: &str| {
            let expected = match want {
                ArgKind::Thing => "a thing",
                ArgKind::Property => "a property reference `thing.property`",
                ArgKind::Power => "a power reference `thing.power`",
                ArgKind::Term => "a term",
            };
            this.error(
                Code::E106,
                &r.span,
                format!("`{pred}` expects {expected} here, but `{r}` is {found}"),
            );
        };
        match want {
            ArgKind::Term => self.lookup_term(ctx, r).map(Arg::Term),
            ArgKind::Thing => {
                if r.qualifier.is_some() {
                    wrong_kind(self, "a part reference");
                    return None;
                }
                match things.get(r.name.as_str()) {
                    Some(t) => Some(Arg::Thing(*t)),
                    None => {
                        self.error(Code::E101, &r.span, format!("no thing `{r}` in this world"));
                        None
                    }
                }
            }
            ArgKind::Property | ArgKind::Power => {
                let Some(owner) = &r.qualifier else {
                    if things.contains_key(r.name.as_str()) {
                        wrong_kind(self, "a thing");
                    } else {
                        self.error(Code::E101, &r.span, format!("no thing `{r}` in this world"));
                    }
                    return None;
                };
                let Some(t) = things.get(owner.as_str()) else {
                    self.error(
                        Code::E101,
                        &r.span,
                        format!("no thing `{owner}` in this world"),
                    );
                    return None;
                };
                match parts.get(&(*t, r.name.as_str())) {
                    Some(Arg::Property(p)) if want == ArgKind::Property => Some(Arg::Property(*p)),
                    Some(Arg::Power(p)) if want == ArgKind::Power => Some(Arg::Power(*p)),
                    Some(Arg::Property(_)) => {
                        wrong_kind(self, "a property");
                        None
                    }
                    Some(Arg::Power(_)) => {
                        wrong_kind(self, "a power");
                        None
                    }
                    _ => {
                        self.error(
                            Code::E101,
                            &r.span,
                            format!("thing `{owner}` has no part `{}`", r.name),
                        );
                        None
                    }
                }
            }
        }
    }
}

/// Tarjan's algorithm; components come out in reverse topological order.
fn strongly_connected(n: usize, edges: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State<'a> {
        edges: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }

    fn visit(s: &mut State<'_>, v: usize) {
        s.index[v] = Some(s.next);
        s.low[v] = s.next;
        s.next += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for &w in &s.edges[v] {
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                Some(_) => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            let mut comp = Vec::new();
            while let Some(w) = s.stack.pop() {
                s.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            s.out.push(comp);
        }
    }

    let mut s = State {
        edges,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ModuleItem, TermDef};

    fn span(line: u32) -> SourceSpan {
        SourceSpan::new("t.onto", (line, 1), (line, 2))
    }

    fn term(name: &str, enriches: &str, line: u32) -> ModuleItem {
        let (q, n) = match enriches.split_once('.') {
            Some((q, n)) => (Some(q), n),
            None => (None, enriches),
        };
        ModuleItem::Term(TermDef {
            name: name.into(),
            enriches: Some(QualifiedRef::new(q, n)),
            scope: None,
            attributes: vec![],
            span: span(line),
        })
    }

    fn module(name: &str, level: Level, line: u32, items: Vec<ModuleItem>) -> OntologyModule {
        OntologyModule {
            name: name.into(),
            level,
            imports: vec![],
            items,
            span: span(line),
        }
    }

    #[test]
    fn empty_suite_has_only_the_builtin() {
        let suite = resolve(&[], &[]).unwrap();
        assert_eq!(suite.modules().count(), 1);
        assert_eq!(suite.module(suite.builtin()).name, "ThingFO");
        assert_eq!(suite.module(suite.builtin()).level, Level::FO);
    }

    #[test]
    fn binds_enrichment_to_foundational_term() {
        let m = module(
            "ProcessCO",
            Level::CO,
            1,
            vec![term("Process", "ThingFO.Thing", 2)],
        );
        let suite = resolve(&[m], &[]).unwrap();
        let (id, t) = suite.terms().next().unwrap();
        assert_eq!(t.enriches, Some(TermRef::Foundational(TermId::Thing)));
        assert_eq!(suite.enrichment_root(TermRef::User(id)), Ok(TermId::Thing));
    }

    #[test]
    fn unknown_term_is_reported_with_span() {
        let mut m = module(
            "ProcessCO",
            Level::CO,
            1,
            vec![term("Process", "ThingFO.Entityy", 2)],
        );
        if let ModuleItem::Term(t) = &mut m.items[0] {
            t.enriches.as_mut().unwrap().span = span(7);
        }
        let diags = resolve(&[m], &[]).unwrap_err();
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, Code::E101);
        assert_eq!(diags[0].span, span(7));
    }

    #[test]
    fn duplicate_terms_and_modules() {
        let a = module(
            "A",
            Level::CO,
            1,
            vec![term("X", "ThingFO.Thing", 2), term("X", "ThingFO.Thing", 3)],
        );
        let b = module("A", Level::CO, 10, vec![]);
        let diags = resolve(&[b, a], &[]).unwrap_err();
        let codes: Vec<_> = diags.iter().map(|d| (d.code, d.span.start_line)).collect();
        assert_eq!(codes, vec![(Code::E102, 3), (Code::E102, 10)]);
    }

    #[test]
    fn user_module_cannot_shadow_builtin() {
        let diags = resolve(&[module("ThingFO", Level::FO, 1, vec![])], &[]).unwrap_err();
        assert_eq!(diags[0].code, Code::E102);
    }

    #[test]
    fn self_import_and_cycles() {
        let mut a = module("A", Level::CO, 1, vec![]);
        a.imports.push(super::super::Import {
            module: "A".into(),
            span: span(1),
        });
        assert_eq!(resolve(&[a], &[]).unwrap_err()[0].code, Code::E104);

        let mut a = module("A", Level::CO, 1, vec![]);
        let mut b = module("B", Level::CO, 5, vec![]);
        a.imports.push(super::super::Import {
            module: "B".into(),
            span: span(2),
        });
        b.imports.push(super::super::Import {
            module: "A".into(),
            span: span(6),
        });
        let diags = resolve(&[a, b], &[]).unwrap_err();
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, Code::E103);
        assert_eq!(diags[0].span, span(2));
    }

    #[test]
    fn enrichment_cycle_is_reported_once() {
        let m = module(
            "A",
            Level::CO,
            1,
            vec![term("X", "Y", 2), term("Y", "X", 3)],
        );
        let diags = resolve(&[m], &[]).unwrap_err();
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, Code::E105);
    }

    #[test]
    fn two_step_enrichment_root() {
        let co = module("C", Level::CO, 1, vec![term("Process", "ThingFO.Thing", 2)]);
        let tdo = module("D", Level::TDO, 5, vec![term("SwProcess", "C.Process", 6)]);
        let suite = resolve(&[tdo, co], &[]).unwrap();
        let (id, _) = suite.terms().find(|(_, t)| t.name == "SwProcess").unwrap();
        // Manual walk: SwProcess -> C.Process -> ThingFO.Thing.
        let step1 = suite.term(id).enriches.unwrap();
        assert_eq!(suite.term_name(step1), "C.Process");
        let TermRef::User(p) = step1 else { panic!() };
        assert_eq!(
            suite.term(p).enriches,
            Some(TermRef::Foundational(TermId::Thing))
        );
        assert_eq!(suite.enrichment_root(TermRef::User(id)), Ok(TermId::Thing));
        assert_eq!(
            suite.enrichment_root(TermRef::Foundational(TermId::Power)),
            Ok(TermId::Power)
        );
    }

    #[test]
    fn ambiguous_bare_name_through_imports() {
        let mut a = module("A", Level::CO, 1, vec![term("Z", "X", 2)]);
        a.imports.push(super::super::Import {
            module: "B".into(),
            span: span(1),
        });
        a.imports.push(super::super::Import {
            module: "C".into(),
            span: span(1),
        });
        let b = module("B", Level::CO, 5, vec![term("X", "ThingFO.Thing", 6)]);
        let c = module("C", Level::CO, 8, vec![term("X", "ThingFO.Thing", 9)]);
        let diags = resolve(&[a, b, c], &[]).unwrap_err();
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("ambiguous"));
    }

    #[test]
    fn merged_view_counts() {
        let a = module("A", Level::CO, 1, vec![term("X", "ThingFO.Thing", 2)]);
        let b = module(
            "B",
            Level::CO,
            5,
            vec![term("Y", "ThingFO.Thing", 6), term("X", "ThingFO.Thing", 7)],
        );
        let suite = resolve(&[a, b], &[]).unwrap();
        let ids: Vec<_> = suite.user_modules().map(|(id, _)| id).collect();
        let view = suite.merged_view(&ids);
        assert_eq!(view.qualified_term_names(&suite), vec!["A.X", "B.Y", "B.X"]);
        let single = suite.merged_view(&ids[..1]);
        assert_eq!(single.qualified_term_names(&suite), vec!["A.X"]);
    }
}
