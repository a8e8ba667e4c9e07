use std::fmt;

use crate::reporting::{Code, Diagnostic};

use super::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Keyword {
    Ontology,
    At,
    Imports,
    Term,
    Enriches,
    Scope,
    Relation,
    From,
    To,
    Kind,
    Instances,
    Of,
    Individual,
    World,
    Thing,
    Property,
    Power,
    FO,
    CO,
    TDO,
    LDO,
}

impl Keyword {
    const ALL: [Keyword; 21] = [
        Keyword::Ontology,
        Keyword::At,
        Keyword::Imports,
        Keyword::Term,
        Keyword::Enriches,
        Keyword::Scope,
        Keyword::Relation,
        Keyword::From,
        Keyword::To,
        Keyword::Kind,
        Keyword::Instances,
        Keyword::Of,
        Keyword::Individual,
        Keyword::World,
        Keyword::Thing,
        Keyword::Property,
        Keyword::Power,
        Keyword::FO,
        Keyword::CO,
        Keyword::TDO,
        Keyword::LDO,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Keyword::Ontology => "ontology",
            Keyword::At => "at",
            Keyword::Imports => "imports",
            Keyword::Term => "term",
            Keyword::Enriches => "enriches",
            Keyword::Scope => "scope",
            Keyword::Relation => "relation",
            Keyword::From => "from",
            Keyword::To => "to",
            Keyword::Kind => "kind",
            Keyword::Instances => "instances",
            Keyword::Of => "of",
            Keyword::Individual => "individual",
            Keyword::World => "world",
            Keyword::Thing => "thing",
            Keyword::Property => "property",
            Keyword::Power => "power",
            Keyword::FO => "FO",
            Keyword::CO => "CO",
            Keyword::TDO => "TDO",
            Keyword::LDO => "LDO",
        }
    }

    pub fn lookup(word: &str) -> Option<Keyword> {
        Keyword::ALL.into_iter().find(|k| k.as_str() == word)
    }
}

pub fn is_keyword(word: &str) -> bool {
    Keyword::lookup(word).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Keyword(Keyword),
    Ident,
    /// Decoded string contents.
    Str(String),
    Punct(char),
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Raw source text of the token.
    pub lexeme: String,
    pub span: SourceSpan,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            TokenKind::Keyword(k) => write!(f, "keyword `{}`", k.as_str()),
            TokenKind::Ident => write!(f, "identifier `{}`", self.lexeme),
            TokenKind::Str(_) => write!(f, "string {}", self.lexeme),
            TokenKind::Punct(c) => write!(f, "`{c}`"),
            TokenKind::Eof => f.write_str("end of input"),
        }
    }
}

const PUNCTUATION: &[char] = &['{', '}', '(', ')', ',', '.', ':', ';'];

struct Lexer<'a> {
    file: &'a str,
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
    tokens: Vec<Token>,
    diags: Vec<Diagnostic>,
}

impl<'a> Lexer<'a> {
    fn pos(&self) -> (u32, u32) {
        (self.line, self.col)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn span(&self, start: (u32, u32)) -> SourceSpan {
        SourceSpan::new(self.file, start, self.pos())
    }

    fn push(&mut self, kind: TokenKind, lexeme: String, start: (u32, u32)) {
        let span = self.span(start);
        self.tokens.push(Token { kind, lexeme, span });
    }

    fn error(&mut self, start: (u32, u32), message: String) {
        let span = self.span(start);
        self.diags.push(Diagnostic::new(Code::E001, span, message));
    }

    fn run(mut self) -> (Vec<Token>, Vec<Diagnostic>) {
        while let Some(&c) = self.chars.peek() {
            let start = self.pos();
            if c.is_whitespace() {
                self.bump();
            } else if c == '/' {
                self.bump();
                if self.chars.peek() == Some(&'/') {
                    while let Some(&c) = self.chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                } else {
                    self.error(
                        start,
                        "invalid character `/` (comments start with `//`)".into(),
                    );
                }
            } else if c.is_ascii_alphabetic() || c == '_' {
                let mut word = String::new();
                while let Some(&c) = self.chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                let kind = match Keyword::lookup(&word) {
                    Some(k) => TokenKind::Keyword(k),
                    None => TokenKind::Ident,
                };
                self.push(kind, word, start);
            } else if c == '"' {
                self.string(start);
            } else if PUNCTUATION.contains(&c) {
                self.bump();
                self.push(TokenKind::Punct(c), c.to_string(), start);
            } else {
                self.bump();
                self.error(start, format!("invalid character `{}`", c.escape_debug()));
            }
        }
        let end = self.pos();
        self.push(TokenKind::Eof, String::new(), end);
        (self.tokens, self.diags)
    }

    fn string(&mut self, start: (u32, u32)) {
        let mut raw = String::from('"');
        let mut value = String::new();
        self.bump();
        loop {
            let here = self.pos();
            match self.bump() {
                None => {
                    self.error(start, "unterminated string literal".into());
                    break;
                }
                Some('"') => {
                    raw.push('"');
                    break;
                }
                Some('\\') => {
                    raw.push('\\');
                    match self.bump() {
                        Some(c @ ('"' | '\\')) => {
                            raw.push(c);
                            value.push(c);
                        }
                        Some(c) => {
                            raw.push(c);
                            self.error(
                                here,
                                format!(
                                    "invalid escape `\\{}` (only `\\\"` and `\\\\` are allowed)",
                                    c.escape_debug()
                                ),
                            );
                        }
                        None => {
                            self.error(start, "unterminated string literal".into());
                            break;
                        }
                    }
                }
                Some(c) => {
                    raw.push(c);
                    value.push(c);
                }
            }
        }
        self.push(TokenKind::Str(value), raw, start);
    }
}

/// Splits `source` into tokens, always ending with an end-of-input token.
/// Invalid characters are reported as E001 and skipped.
pub fn tokenize(file: &str, source: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    Lexer {
        file,
        chars: source.chars().peekable(),
        line: 1,
        col: 1,
        tokens: Vec::new(),
        diags: Vec::new(),
    }
    .run()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize("t", src).0.into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn module_header() {
        use Keyword as K;
        assert_eq!(
            kinds("ontology A at CO { }"),
            vec![
                TokenKind::Keyword(K::Ontology),
                TokenKind::Ident,
                TokenKind::Keyword(K::At),
                TokenKind::Keyword(K::CO),
                TokenKind::Punct('{'),
                TokenKind::Punct('}'),
                TokenKind::Eof,
            ]
        );
    }

    #[test]
    fn empty_input() {
        assert_eq!(kinds(""), vec![TokenKind::Eof]);
    }

    #[test]
    fn invalid_character_recovers() {
        let (tokens, diags) = tokenize("t", "term Pro¢ess");
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, Code::E001);
        assert_eq!(diags[0].span.start(), (1, 9));
        let lexemes: Vec<_> = tokens.iter().map(|t| t.lexeme.as_str()).collect();
        assert_eq!(lexemes, vec!["term", "Pro", "ess", ""]);
    }

    #[test]
    fn comments_are_dropped() {
        assert_eq!(
            kinds("// hello\nterm // trailing\n"),
            vec![TokenKind::Keyword(Keyword::Term), TokenKind::Eof]
        );
    }

    #[test]
    fn string_escapes() {
        let (tokens, diags) = tokenize("t", r#""a \"b\" \\ c""#);
        assert!(diags.is_empty());
        assert_eq!(tokens[0].kind, TokenKind::Str(r#"a "b" \ c"#.into()));
        let (_, diags) = tokenize("t", r#""bad \n""#);
        assert_eq!(diags.len(), 1);
        let (_, diags) = tokenize("t", "\"open");
        assert_eq!(diags[0].message, "unterminated string literal");
    }

    #[test]
    fn spans_are_ordered_and_disjoint() {
        let (tokens, _) = tokenize(
            "t",
            "ontology A at CO {\n  term X enriches ThingFO.Thing\n}\n",
        );
        for pair in tokens.windows(2) {
            assert!(pair[0].span.end() <= pair[1].span.start());
            assert!(pair[0].span.start() <= pair[0].span.end());
        }
        assert_eq!(tokens[5].span.start(), (2, 3));
    }
}
