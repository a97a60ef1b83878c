//! Recursive-descent parser for ring and ideal expressions.
//!
//! ```text
//! ring     := term { "x" term }
//! term     := atom [ "/" idealLit ]
//! atom     := "Z" digits | "LocalAlg(" digits ")" | "Loc(" ring "," elemList ")"
//!           | "Idealize(" ring "," idealLit ")" | "(" ring ")"
//! idealLit := "(" [ elem { "," elem } ] ")"
//! elemList := elem { "," elem }
//! elem     := digits | "(" elem "," elem ")"
//! ```
//!
//! Whitespace is ignored between tokens. Keywords are matched by prefix, so
//! `Z2xZ3` parses the same as `Z2 x Z3`.

use super::ast::{ElemLit, RingExpr};
use crate::error::SyntaxError;

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
    /// Tokens tried at `furthest` without success; merged into the error.
    expected: Vec<&'static str>,
    furthest: usize,
}

type PResult<T> = Result<T, SyntaxError>;

const MAX_NESTING: usize = 256;

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Parser {
            src,
            pos: 0,
            expected: Vec::new(),
            furthest: 0,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn note(&mut self, token: &'static str) {
        if self.pos > self.furthest {
            self.furthest = self.pos;
            self.expected.clear();
        }
        if self.pos == self.furthest && !self.expected.contains(&token) {
            self.expected.push(token);
        }
    }

    fn error(&mut self) -> SyntaxError {
        let offset = self.furthest.max(self.pos);
        let mut expected = if offset == self.furthest {
            self.expected.clone()
        } else {
            Vec::new()
        };
        expected.sort_unstable();
        SyntaxError {
            offset,
            expected,
            found: self.src[offset..].chars().next(),
        }
    }

    fn fail<T>(&mut self, token: &'static str) -> PResult<T> {
        self.note(token);
        Err(self.error())
    }

    /// Consumes `kw` (after whitespace) if present.
    fn eat(&mut self, kw: &'static str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw) {
            self.pos += kw.len();
            true
        } else {
            self.note(kw);
            false
        }
    }

    fn expect(&mut self, kw: &'static str) -> PResult<()> {
        if self.eat(kw) {
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn digits(&mut self) -> PResult<u64> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if len == 0 {
            return self.fail("digits");
        }
        self.pos += len;
        self.src[start..self.pos].parse::<u64>().map_err(|_| SyntaxError {
            offset: start,
            expected: vec!["integer below 2^64"],
            found: self.src[start..].chars().next(),
        })
    }

    pub(crate) fn finish(&mut self) -> PResult<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }

    pub(crate) fn ring(&mut self, depth: usize) -> PResult<RingExpr> {
        if depth > MAX_NESTING {
            return Err(SyntaxError {
                offset: self.pos,
                expected: vec!["shallower nesting"],
                found: self.src[self.pos..].chars().next(),
            });
        }
        let mut lhs = self.term(depth)?;
        while self.eat("x") {
            let rhs = self.term(depth)?;
            lhs = RingExpr::product(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self, depth: usize) -> PResult<RingExpr> {
        let atom = self.atom(depth)?;
        if self.eat("/") {
            let gens = self.ideal_lit()?;
            Ok(RingExpr::quotient(atom, gens))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self, depth: usize) -> PResult<RingExpr> {
        // Longer keywords first: "LocalAlg" shares a prefix with "Loc".
        if self.eat("LocalAlg") {
            self.expect("(")?;
            let p = self.digits()?;
            self.expect(")")?;
            return Ok(RingExpr::LocalAlg(p));
        }
        if self.eat("Loc") {
            self.expect("(")?;
            let r = self.ring(depth + 1)?;
            self.expect(",")?;
            let mut set = vec![self.elem(depth + 1)?];
            while self.eat(",") {
                set.push(self.elem(depth + 1)?);
            }
            self.expect(")")?;
            return Ok(RingExpr::localize(r, set));
        }
        if self.eat("Idealize") {
            self.expect("(")?;
            let r = self.ring(depth + 1)?;
            self.expect(",")?;
            let gens = self.ideal_lit()?;
            self.expect(")")?;
            return Ok(RingExpr::idealize(r, gens));
        }
        if self.eat("Z") {
            return Ok(RingExpr::Zn(self.digits()?));
        }
        if self.eat("(") {
            let r = self.ring(depth + 1)?;
            self.expect(")")?;
            return Ok(r);
        }
        Err(self.error())
    }

    pub(crate) fn ideal_lit(&mut self) -> PResult<Vec<ElemLit>> {
        self.expect("(")?;
        let mut gens = Vec::new();
        if self.eat(")") {
            return Ok(gens);
        }
        gens.push(self.elem(0)?);
        while self.eat(",") {
            gens.push(self.elem(0)?);
        }
        self.expect(")")?;
        Ok(gens)
    }

    fn elem(&mut self, depth: usize) -> PResult<ElemLit> {
        if depth > MAX_NESTING {
            return Err(SyntaxError {
                offset: self.pos,
                expected: vec!["shallower nesting"],
                found: self.src[self.pos..].chars().next(),
            });
        }
        if self.eat("(") {
            let a = self.elem(depth + 1)?;
            self.expect(",")?;
            let b = self.elem(depth + 1)?;
            self.expect(")")?;
            return Ok(ElemLit::pair(a, b));
        }
        Ok(ElemLit::Int(self.digits()?))
    }
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr, SyntaxError> {
    let mut p = Parser::new(text);
    let r = p.ring(0)?;
    p.finish()?;
    Ok(r)
}

pub fn parse_ideal_lit(text: &str) -> Result<Vec<ElemLit>, SyntaxError> {
    let mut p = Parser::new(text);
    let gens = p.ideal_lit()?;
    p.finish()?;
    Ok(gens)
}

pub fn parse_elem_lit(text: &str) -> Result<ElemLit, SyntaxError> {
    let mut p = Parser::new(text);
    let e = p.elem(0)?;
    p.finish()?;
    Ok(e)
}
