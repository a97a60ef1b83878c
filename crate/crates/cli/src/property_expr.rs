//! Boolean expressions over the six ideal properties, e.g.
//! `w1ap AND NOT (weaklyPrime OR prime)`.
//!
//! `NOT` binds tighter than `AND`, which binds tighter than `OR`. Keywords
//! are case-insensitive; `!`, `&&` and `||` are accepted as well.

use std::fmt;

use idealis_core::{Property, PropertyReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropExpr {
    Atom(Property),
    Not(Box<PropExpr>),
    And(Box<PropExpr>, Box<PropExpr>),
    Or(Box<PropExpr>, Box<PropExpr>),
}

impl PropExpr {
    pub fn eval(&self, r: &PropertyReport) -> bool {
        self.eval_with(&|p| r.holds(p))
    }

    pub fn eval_with(&self, holds: &dyn Fn(Property) -> bool) -> bool {
        match self {
            PropExpr::Atom(p) => holds(*p),
            PropExpr::Not(e) => !e.eval_with(holds),
            PropExpr::And(a, b) => a.eval_with(holds) && b.eval_with(holds),
            PropExpr::Or(a, b) => a.eval_with(holds) || b.eval_with(holds),
        }
    }

    /// True when no assignment of the six properties satisfies the
    /// expression.
    pub fn is_unsatisfiable(&self) -> bool {
        (0u32..64).all(|bits| !self.eval_with(&|p| bits >> p.index() & 1 == 1))
    }
}

impl fmt::Display for PropExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropExpr::Atom(p) => write!(f, "{p}"),
            PropExpr::Not(e) => write!(f, "NOT {e}"),
            PropExpr::And(a, b) => write!(f, "({a} AND {b})"),
            PropExpr::Or(a, b) => write!(f, "({a} OR {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropExprError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for PropExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad property expression at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for PropExprError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    And,
    Or,
    Not,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, PropExprError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::Open,
            b')' => Tok::Close,
            b'!' => Tok::Not,
            b'&' | b'|' if bytes.get(i + 1) == Some(&c) => {
                out.push((i, if c == b'&' { Tok::And } else { Tok::Or }));
                i += 2;
                continue;
            }
            c if c.is_ascii_alphanumeric() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &s[start..i];
                let tok = match word.to_ascii_uppercase().as_str() {
                    "AND" => Tok::And,
                    "OR" => Tok::Or,
                    "NOT" => Tok::Not,
                    _ => Tok::Name(word.to_string()),
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                return Err(PropExprError {
                    offset: i,
                    message: format!("unexpected character `{}`", s[i..].chars().next().unwrap()),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err(&self, message: &str) -> PropExprError {
        PropExprError { offset: self.offset(), message: message.into() }
    }

    fn or(&mut self) -> Result<PropExpr, PropExprError> {
        let mut e = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            e = PropExpr::Or(Box::new(e), Box::new(self.and()?));
        }
        Ok(e)
    }

    fn and(&mut self) -> Result<PropExpr, PropExprError> {
        let mut e = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            e = PropExpr::And(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<PropExpr, PropExprError> {
        match self.peek().cloned() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(PropExpr::Not(Box::new(self.unary()?)))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.or()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Name(n)) => match Property::from_name(&n) {
                Some(p) => {
                    self.pos += 1;
                    Ok(PropExpr::Atom(p))
                }
                None => Err(self.err(&format!("unknown property `{n}`"))),
            },
            _ => Err(self.err("expected a property name, NOT or `(`")),
        }
    }
}

pub fn parse_property_expr(s: &str) -> Result<PropExpr, PropExprError> {
    let mut p = Parser { toks: lex(s)?, pos: 0, end: s.len() };
    let e = p.or()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}
