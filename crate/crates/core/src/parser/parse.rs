use crate::metamodel::ScopeFacet;
use crate::model::{
    Attribute, Fact, Import, Individual, InstanceFile, InstanceItem, Level, ModuleItem,
    OntologyModule, PartDecl, Predicate, QualifiedRef, RelationDecl, TermDef, ThingNode, World,
};
use crate::reporting::{Code, Diagnostic};

use super::lexer::{tokenize, Keyword, Token, TokenKind};
use super::{FileAst, FileItem, SourceSpan, SuiteAst};

/// The error has already been recorded as a diagnostic.
type PResult<T> = Result<T, ()>;

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    diags: Vec<Diagnostic>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &'a Token {
        &self.tokens[self.pos]
    }

    fn at_eof(&self) -> bool {
        self.peek().kind == TokenKind::Eof
    }

    fn bump(&mut self) -> &'a Token {
        let t = &self.tokens[self.pos];
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    /// Span of the most recently consumed token.
    fn prev_span(&self) -> &'a SourceSpan {
        &self.tokens[self.pos.saturating_sub(1)].span
    }

    fn at_kw(&self, k: Keyword) -> bool {
        self.peek().kind == TokenKind::Keyword(k)
    }

    fn at_punct(&self, c: char) -> bool {
        self.peek().kind == TokenKind::Punct(c)
    }

    fn unexpected(&mut self, expected: &str) {
        let tok = self.peek();
        self.diags.push(Diagnostic::new(
            Code::E002,
            tok.span.clone(),
            format!("expected {expected}, found {tok}"),
        ));
    }

    fn expect_kw(&mut self, k: Keyword) -> PResult<&'a Token> {
        if self.at_kw(k) {
            Ok(self.bump())
        } else {
            self.unexpected(&format!("`{}`", k.as_str()));
            Err(())
        }
    }

    fn expect_punct(&mut self, c: char) -> PResult<&'a Token> {
        if self.at_punct(c) {
            Ok(self.bump())
        } else {
            self.unexpected(&format!("`{c}`"));
            Err(())
        }
    }

    fn expect_ident(&mut self) -> PResult<&'a Token> {
        if self.peek().kind == TokenKind::Ident {
            Ok(self.bump())
        } else {
            self.unexpected("an identifier");
            Err(())
        }
    }

    /// Skips tokens until one satisfying `stop` (or end of input).
    fn skip_until(&mut self, stop: impl Fn(&Token) -> bool) {
        while !self.at_eof() && !stop(self.peek()) {
            self.bump();
        }
    }

    fn qname(&mut self) -> PResult<QualifiedRef> {
        let first = self.expect_ident()?;
        if self.at_punct('.') {
            self.bump();
            let second = self.expect_ident()?;
            Ok(QualifiedRef {
                qualifier: Some(first.lexeme.clone()),
                name: second.lexeme.clone(),
                span: first.span.to(&second.span),
            })
        } else {
            Ok(QualifiedRef {
                qualifier: None,
                name: first.lexeme.clone(),
                span: first.span.clone(),
            })
        }
    }

    fn file(&mut self) -> Vec<FileItem> {
        let mut items = Vec::new();
        while !self.at_eof() {
            if self.at_kw(Keyword::Ontology) {
                if let Ok(m) = self.module() {
                    items.push(FileItem::Module(m));
                }
            } else if self.at_kw(Keyword::Instances) {
                if let Ok(i) = self.instances() {
                    items.push(FileItem::Instances(i));
                }
            } else {
                self.unexpected("`ontology` or `instances`");
                self.bump();
                self.skip_until(is_top_level);
            }
        }
        items
    }

    fn module(&mut self) -> PResult<OntologyModule> {
        let start = self.bump().span.clone();
        let name = self.expect_ident()?.lexeme.clone();
        self.expect_kw(Keyword::At)?;
        let tok = self.peek();
        let level = match &tok.kind {
            TokenKind::Keyword(_) | TokenKind::Ident => Level::from_module_keyword(&tok.lexeme),
            _ => {
                self.unexpected("a level (FO, CO, TDO, LDO)");
                return Err(());
            }
        };
        let level = match level {
            Some(l) => Some(l),
            None => {
                self.diags.push(Diagnostic::new(
                    Code::E003,
                    tok.span.clone(),
                    format!(
                        "unknown level `{}` (expected FO, CO, TDO or LDO)",
                        tok.lexeme
                    ),
                ));
                None
            }
        };
        self.bump();
        self.expect_punct('{')?;

        let mut imports = Vec::new();
        while self.at_kw(Keyword::Imports) {
            let kw = self.bump();
            match self.expect_ident() {
                Ok(id) => imports.push(Import {
                    module: id.lexeme.clone(),
                    span: kw.span.to(&id.span),
                }),
                Err(()) => self.skip_until(is_module_sync),
            }
        }

        let mut items = Vec::new();
        let mut ok = true;
        loop {
            let tok = self.peek();
            match &tok.kind {
                TokenKind::Punct('}') => {
                    self.bump();
                    break;
                }
                TokenKind::Keyword(Keyword::Term) => match self.term() {
                    Ok(t) => items.push(ModuleItem::Term(t)),
                    Err(()) => {
                        ok = false;
                        self.skip_until(is_module_sync);
                    }
                },
                TokenKind::Keyword(Keyword::Relation) => match self.relation() {
                    Ok(r) => items.push(ModuleItem::Relation(r)),
                    Err(()) => {
                        ok = false;
                        self.skip_until(is_module_sync);
                    }
                },
                TokenKind::Eof | TokenKind::Keyword(Keyword::Ontology | Keyword::Instances) => {
                    self.unexpected("`}`");
                    return Err(());
                }
                _ => {
                    let expected = if tok.kind == TokenKind::Keyword(Keyword::Imports) {
                        "`term` or `relation` (imports must come first)"
                    } else {
                        "`term`, `relation` or `}`"
                    };
                    self.unexpected(expected);
                    ok = false;
                    self.bump();
                    self.skip_until(is_module_sync);
                }
            }
        }
        match (ok, level) {
            (true, Some(level)) => Ok(OntologyModule {
                name,
                level,
                imports,
                items,
                span: start.to(self.prev_span()),
            }),
            _ => Err(()),
        }
    }

    fn term(&mut self) -> PResult<TermDef> {
        let start = self.bump().span.clone();
        let name = self.expect_ident()?.lexeme.clone();
        self.expect_kw(Keyword::Enriches)?;
        let enriches = self.qname()?;
        let mut scope = None;
        if self.at_kw(Keyword::Scope) {
            self.bump();
            let tok = self.peek();
            match (&tok.kind, ScopeFacet::from_keyword(&tok.lexeme)) {
                (TokenKind::Ident, Some(s)) => {
                    self.bump();
                    scope = Some(s);
                }
                _ => {
                    self.unexpected("`particulars` or `universals`");
                    return Err(());
                }
            }
        }
        let mut attributes = Vec::new();
        if self.at_punct('{') {
            self.bump();
            loop {
                let tok = self.peek();
                match &tok.kind {
                    TokenKind::Punct('}') => {
                        self.bump();
                        break;
                    }
                    TokenKind::Ident => {
                        self.bump();
                        let value = self.peek();
                        if let TokenKind::Str(text) = &value.kind {
                            self.bump();
                            attributes.push(Attribute {
                                key: tok.lexeme.clone(),
                                value: text.clone(),
                                span: tok.span.to(&value.span),
                            });
                        } else {
                            self.unexpected("a string value");
                            self.skip_block();
                            return Err(());
                        }
                    }
                    _ => {
                        self.unexpected("an attribute key or `}`");
                        self.skip_block();
                        return Err(());
                    }
                }
            }
        }
        Ok(TermDef {
            name,
            enriches: Some(enriches),
            scope,
            attributes,
            span: start.to(self.prev_span()),
        })
    }

    /// Error recovery inside a `{ ... }` block: skip past its closing brace.
    fn skip_block(&mut self) {
        self.skip_until(|t| t.kind == TokenKind::Punct('}') || is_top_level(t));
        if self.at_punct('}') {
            self.bump();
        }
    }

    fn relation(&mut self) -> PResult<RelationDecl> {
        let start = self.bump().span.clone();
        let name = self.expect_ident()?.lexeme.clone();
        self.expect_kw(Keyword::From)?;
        let from = self.qname()?;
        self.expect_kw(Keyword::To)?;
        let to = self.qname()?;
        self.expect_kw(Keyword::Kind)?;
        let kind = self.qname()?;
        Ok(RelationDecl {
            name,
            from,
            to,
            kind,
            span: start.to(self.prev_span()),
        })
    }

    fn instances(&mut self) -> PResult<InstanceFile> {
        let start = self.bump().span.clone();
        self.expect_kw(Keyword::Of)?;
        let of = self.expect_ident()?;
        self.expect_punct('{')?;
        let mut items = Vec::new();
        let mut ok = true;
        loop {
            let tok = self.peek();
            match &tok.kind {
                TokenKind::Punct('}') => {
                    self.bump();
                    break;
                }
                TokenKind::Keyword(Keyword::Individual) => match self.individual() {
                    Ok(i) => items.push(InstanceItem::Individual(i)),
                    Err(()) => {
                        ok = false;
                        self.skip_until(is_instances_sync);
                    }
                },
                TokenKind::Keyword(Keyword::World) => match self.world() {
                    Ok(w) => items.push(InstanceItem::World(w)),
                    Err(()) => {
                        ok = false;
                        self.skip_until(is_instances_sync);
                    }
                },
                TokenKind::Eof | TokenKind::Keyword(Keyword::Ontology | Keyword::Instances) => {
                    self.unexpected("`}`");
                    return Err(());
                }
                _ => {
                    self.unexpected("`individual`, `world` or `}`");
                    ok = false;
                    self.bump();
                    self.skip_until(is_instances_sync);
                }
            }
        }
        if !ok {
            return Err(());
        }
        Ok(InstanceFile {
            of_module: of.lexeme.clone(),
            of_span: of.span.clone(),
            items,
            span: start.to(self.prev_span()),
        })
    }

    fn individual(&mut self) -> PResult<Individual> {
        let start = self.bump().span.clone();
        let name = self.expect_ident()?.lexeme.clone();
        self.expect_punct(':')?;
        let ty = self.qname()?;
        Ok(Individual {
            name,
            ty,
            span: start.to(self.prev_span()),
        })
    }

    fn world(&mut self) -> PResult<World> {
        let start = self.bump().span.clone();
        let name = self.expect_ident()?.lexeme.clone();
        self.expect_punct('{')?;
        let mut things = Vec::new();
        let mut facts = Vec::new();
        let mut ok = true;
        loop {
            let tok = self.peek();
            match &tok.kind {
                TokenKind::Punct('}') => {
                    self.bump();
                    break;
                }
                TokenKind::Keyword(Keyword::Thing) => {
                    if !facts.is_empty() {
                        self.unexpected("a fact (thing declarations come before facts)");
                        ok = false;
                    }
                    match self.thing() {
                        Ok(t) => things.push(t),
                        Err(()) => {
                            ok = false;
                            self.skip_until(is_world_sync);
                        }
                    }
                }
                TokenKind::Ident => match self.fact() {
                    Ok(f) => facts.push(f),
                    Err(()) => {
                        ok = false;
                        if self.at_punct(')') {
                            self.bump();
                        }
                        self.skip_until(is_world_sync);
                    }
                },
                TokenKind::Eof | TokenKind::Keyword(Keyword::Ontology | Keyword::Instances) => {
                    self.unexpected("`}`");
                    return Err(());
                }
                _ => {
                    self.unexpected("`thing`, a fact or `}`");
                    ok = false;
                    self.bump();
                    self.skip_until(is_world_sync);
                }
            }
        }
        if !ok {
            return Err(());
        }
        Ok(World {
            name,
            things,
            facts,
            span: start.to(self.prev_span()),
        })
    }

    fn thing(&mut self) -> PResult<ThingNode> {
        let start = self.bump().span.clone();
        let id = self.expect_ident()?.lexeme.clone();
        let instance_of = if self.at_punct(':') {
            self.bump();
            Some(self.qname()?)
        } else {
            None
        };
        self.expect_punct('{')?;
        let mut properties = Vec::new();
        let mut powers = Vec::new();
        loop {
            let tok = self.peek();
            match &tok.kind {
                TokenKind::Punct('}') => {
                    self.bump();
                    break;
                }
                TokenKind::Keyword(k @ (Keyword::Property | Keyword::Power)) => {
                    if *k == Keyword::Property && !powers.is_empty() {
                        self.unexpected("`power` or `}` (properties come before powers)");
                        self.skip_block();
                        return Err(());
                    }
                    self.bump();
                    let Ok(name) = self.expect_ident() else {
                        self.skip_block();
                        return Err(());
                    };
                    if self.expect_punct(';').is_err() {
                        self.skip_block();
                        return Err(());
                    }
                    let part = PartDecl {
                        name: name.lexeme.clone(),
                        span: tok.span.to(self.prev_span()),
                    };
                    if *k == Keyword::Property {
                        properties.push(part);
                    } else {
                        powers.push(part);
                    }
                }
                _ => {
                    self.unexpected("`property`, `power` or `}`");
                    self.skip_block();
                    return Err(());
                }
            }
        }
        Ok(ThingNode {
            id,
            instance_of,
            properties,
            powers,
            span: start.to(self.prev_span()),
        })
    }

    fn fact(&mut self) -> PResult<Fact> {
        let head = self.bump();
        let predicate = Predicate::parse(&head.lexeme);
        if predicate.is_none() {
            self.diags.push(Diagnostic::new(
                Code::E004,
                head.span.clone(),
                format!(
                    "unknown fact predicate `{}` (expected one of: {})",
                    head.lexeme,
                    Predicate::ALL.map(|p| p.as_str()).join(", ")
                ),
            ));
        }
        self.expect_punct('(')?;
        let subject = self.qname()?;
        self.expect_punct(',')?;
        let object = self.qname()?;
        self.expect_punct(')')?;
        let Some(predicate) = predicate else {
            return Err(());
        };
        Ok(Fact {
            predicate,
            subject,
            object,
            span: head.span.to(self.prev_span()),
        })
    }
}

fn is_top_level(t: &Token) -> bool {
    matches!(
        t.kind,
        TokenKind::Keyword(Keyword::Ontology | Keyword::Instances) | TokenKind::Eof
    )
}

fn is_module_sync(t: &Token) -> bool {
    is_top_level(t)
        || matches!(
            t.kind,
            TokenKind::Keyword(Keyword::Term | Keyword::Relation) | TokenKind::Punct('}')
        )
}

fn is_instances_sync(t: &Token) -> bool {
    is_top_level(t)
        || matches!(
            t.kind,
            TokenKind::Keyword(Keyword::Individual | Keyword::World) | TokenKind::Punct('}')
        )
}

fn is_world_sync(t: &Token) -> bool {
    is_instances_sync(t)
        || t.kind == TokenKind::Keyword(Keyword::Thing)
        || t.kind == TokenKind::Ident
}

/// Parses one source file. The file's AST is returned only if it lexed and
/// parsed without any diagnostic.
pub fn parse_source(path: &str, source: &str) -> (Option<FileAst>, Vec<Diagnostic>) {
    let (tokens, mut diags) = tokenize(path, source);
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        diags: Vec::new(),
    };
    let items = parser.file();
    diags.extend(parser.diags);
    if diags.is_empty() {
        (
            Some(FileAst {
                path: path.to_string(),
                items,
            }),
            diags,
        )
    } else {
        (None, diags)
    }
}

/// Parses every `(path, text)` pair. Files with diagnostics are left out of
/// the returned AST.
pub fn parse_suite<P: AsRef<str>, S: AsRef<str>>(files: &[(P, S)]) -> (SuiteAst, Vec<Diagnostic>) {
    let mut suite = SuiteAst::default();
    let mut diags = Vec::new();
    for (path, text) in files {
        let (ast, d) = parse_source(path.as_ref(), text.as_ref());
        diags.extend(d);
        if let Some(ast) = ast {
            suite.files.push(ast);
        }
    }
    (suite, diags)
}
