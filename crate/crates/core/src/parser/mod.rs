//! Lexer, recursive-descent parser and canonical printer for `.onto` files.

mod lexer;
mod parse;
mod render;
mod span;

pub use lexer::{is_keyword, tokenize, Keyword, Token, TokenKind};
pub use parse::{parse_source, parse_suite};
pub use render::{render_canonical, render_file};
pub use span::SourceSpan;

use crate::model::{InstanceFile, InstanceItem, ModuleItem, OntologyModule};

/// Parsed, unresolved contents of a set of files.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteAst {
    pub files: Vec<FileAst>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileAst {
    pub path: String,
    pub items: Vec<FileItem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FileItem {
    Module(OntologyModule),
    Instances(InstanceFile),
}

impl SuiteAst {
    pub fn modules(&self) -> impl Iterator<Item = &OntologyModule> {
        self.files
            .iter()
            .flat_map(|f| &f.items)
            .filter_map(|i| match i {
                FileItem::Module(m) => Some(m),
                FileItem::Instances(_) => None,
            })
    }

    pub fn instances(&self) -> impl Iterator<Item = &InstanceFile> {
        self.files
            .iter()
            .flat_map(|f| &f.items)
            .filter_map(|i| match i {
                FileItem::Instances(x) => Some(x),
                FileItem::Module(_) => None,
            })
    }

    /// Owned copies of every module and instance block, ready for resolution.
    pub fn split(&self) -> (Vec<OntologyModule>, Vec<InstanceFile>) {
        (
            self.modules().cloned().collect(),
            self.instances().cloned().collect(),
        )
    }

    /// A copy with every span reset, for comparing structure only.
    pub fn without_spans(&self) -> SuiteAst {
        SuiteAst {
            files: self.files.iter().map(FileAst::without_spans).collect(),
        }
    }
}

impl FileAst {
    pub fn without_spans(&self) -> FileAst {
        let items = self
            .items
            .iter()
            .map(|item| match item {
                FileItem::Module(m) => FileItem::Module(strip_module(m)),
                FileItem::Instances(i) => FileItem::Instances(strip_instances(i)),
            })
            .collect();
        FileAst {
            path: self.path.clone(),
            items,
        }
    }
}

fn strip_module(m: &OntologyModule) -> OntologyModule {
    let mut m = m.clone();
    m.span = SourceSpan::default();
    for imp in &mut m.imports {
        imp.span = SourceSpan::default();
    }
    for item in &mut m.items {
        match item {
            ModuleItem::Term(t) => {
                t.span = SourceSpan::default();
                if let Some(e) = &mut t.enriches {
                    e.span = SourceSpan::default();
                }
                for a in &mut t.attributes {
                    a.span = SourceSpan::default();
                }
            }
            ModuleItem::Relation(r) => {
                r.span = SourceSpan::default();
                r.from.span = SourceSpan::default();
                r.to.span = SourceSpan::default();
                r.kind.span = SourceSpan::default();
            }
        }
    }
    m
}

fn strip_instances(i: &InstanceFile) -> InstanceFile {
    let mut i = i.clone();
    i.span = SourceSpan::default();
    i.of_span = SourceSpan::default();
    for item in &mut i.items {
        match item {
            InstanceItem::Individual(ind) => {
                ind.span = SourceSpan::default();
                ind.ty.span = SourceSpan::default();
            }
            InstanceItem::World(w) => {
                w.span = SourceSpan::default();
                for t in &mut w.things {
                    t.span = SourceSpan::default();
                    if let Some(r) = &mut t.instance_of {
                        r.span = SourceSpan::default();
                    }
                    for p in t.properties.iter_mut().chain(t.powers.iter_mut()) {
                        p.span = SourceSpan::default();
                    }
                }
                for f in &mut w.facts {
                    f.span = SourceSpan::default();
                    f.subject.span = SourceSpan::default();
                    f.object.span = SourceSpan::default();
                }
            }
        }
    }
    i
}
