//! Recursive-descent parser.
//!
//! ```text
//! formula := impl
//! impl    := disj ("->" impl)?
//! disj    := conj ("|" conj)*
//! conj    := unary ("&" unary)*
//! unary   := "~" unary | "B" unary | "not" unary | "(" formula ")"
//!          | "true" | "false" | IDENT
//! ```
//!
//! `#` starts a line comment. The symbols `¬ ∧ ∨ ⊃` are accepted as
//! aliases for `~ & | ->`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    ReservedWord(String),
    Empty,
}

/// A syntax error. Line and column are 1-based and count characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "expected {expected}, found end of input")
            }
            ParseErrorKind::ReservedWord(w) => write!(f, "reserved word `{w}` used as an atom"),
            ParseErrorKind::Empty => f.write_str("empty formula"),
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Believe,
    Naf,
    Tilde,
    Amp,
    Bar,
    Arrow,
    LParen,
    RParen,
}

impl Tok {
    fn text(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::True => "true".into(),
            Tok::False => "false".into(),
            Tok::Believe => "B".into(),
            Tok::Naf => "not".into(),
            Tok::Tilde => "~".into(),
            Tok::Amp => "&".into(),
            Tok::Bar => "|".into(),
            Tok::Arrow => "->".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
        }
    }

    fn starts_operand(&self) -> bool {
        matches!(
            self,
            Tok::Ident(_) | Tok::True | Tok::False | Tok::Believe | Tok::Naf | Tok::Tilde | Tok::LParen
        )
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(text: &str, first_line: usize) -> Result<(Vec<(Tok, Pos)>, Pos), ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: first_line, column: 1 };
    while let Some(&c) = chars.peek() {
        let here = pos;
        let single = match c {
            '\n' => {
                chars.next();
                pos.line += 1;
                pos.column = 1;
                continue;
            }
            c if c.is_whitespace() => {
                chars.next();
                pos.column += 1;
                continue;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    pos.column += 1;
                }
                continue;
            }
            '~' | '¬' => Some(Tok::Tilde),
            '&' | '∧' => Some(Tok::Amp),
            '|' | '∨' => Some(Tok::Bar),
            '⊃' => Some(Tok::Arrow),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            pos.column += 1;
            out.push((tok, here));
            continue;
        }
        if c == '-' {
            chars.next();
            pos.column += 1;
            if chars.peek() == Some(&'>') {
                chars.next();
                pos.column += 1;
                out.push((Tok::Arrow, here));
                continue;
            }
            return Err(ParseError {
                line: here.line,
                column: here.column,
                kind: ParseErrorKind::UnexpectedChar('-'),
            });
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    word.push(c);
                    chars.next();
                    pos.column += 1;
                } else {
                    break;
                }
            }
            let tok = match word.as_str() {
                "B" => Tok::Believe,
                "not" => Tok::Naf,
                "true" => Tok::True,
                "false" => Tok::False,
                _ => Tok::Ident(word),
            };
            out.push((tok, here));
            continue;
        }
        return Err(ParseError {
            line: here.line,
            column: here.column,
            kind: ParseErrorKind::UnexpectedChar(c),
        });
    }
    Ok((out, pos))
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn error(&self, expected: &'static str) -> ParseError {
        let pos = self.pos();
        let kind = match self.peek() {
            Some(t) => ParseErrorKind::UnexpectedToken { found: t.text(), expected },
            None => ParseErrorKind::UnexpectedEnd { expected },
        };
        ParseError { line: pos.line, column: pos.column, kind }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Bar) {
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Amp) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("a formula"));
        };
        self.at += 1;
        match tok {
            Tok::Tilde => Ok(Formula::not(self.unary()?)),
            Tok::Believe | Tok::Naf => {
                if !self.peek().is_some_and(Tok::starts_operand) {
                    // `B` or `not` with nothing to apply to: the user most
                    // likely meant an atom of that name.
                    return Err(ParseError {
                        line: pos.line,
                        column: pos.column,
                        kind: ParseErrorKind::ReservedWord(tok.text()),
                    });
                }
                let body = self.unary()?;
                Ok(if tok == Tok::Believe { Formula::believe(body) } else { Formula::naf(body) })
            }
            Tok::LParen => {
                let inner = self.implication()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("`)`"));
                }
                Ok(inner)
            }
            Tok::True => Ok(Formula::True),
            Tok::False => Ok(Formula::False),
            Tok::Ident(name) => Ok(Formula::Atom(name)),
            _ => {
                self.at -= 1;
                Err(self.error("a formula"))
            }
        }
    }
}

fn parse_at(text: &str, first_line: usize) -> Result<Formula, ParseError> {
    let (toks, end) = lex(text, first_line)?;
    if toks.is_empty() {
        return Err(ParseError { line: first_line, column: 1, kind: ParseErrorKind::Empty });
    }
    let mut parser = Parser { toks, at: 0, end };
    let f = parser.implication()?;
    if parser.peek().is_some() {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(f)
}

/// Parses a single formula. Newlines are allowed and treated as spaces.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    parse_at(text, 1)
}

/// Parses a theory: one formula per line, blank and comment-only lines
/// skipped. Error positions refer to lines of `text`.
pub fn parse_theory(text: &str) -> Result<Vec<Formula>, ParseError> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let code = line.split('#').next().unwrap_or("");
        if code.trim().is_empty() {
            continue;
        }
        out.push(parse_at(line, idx + 1)?);
    }
    Ok(out)
}
