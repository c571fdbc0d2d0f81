//! Polynomial expressions: `+ -` bind loosest, then `* /`, then unary minus, then `^`.

use num::{BigInt, One, Zero};

use super::lexer::{Tok, Token};
use super::{DslError, DslErrorKind, Pos};
use crate::exactla::Q;
use crate::graded::{Generator, Polynomial};

const MAX_TOTAL_EXPONENT: u64 = 256;
const MAX_TERMS: usize = 20_000;
const MAX_NESTING: usize = 64;

pub(crate) struct Cursor {
    toks: Vec<Token>,
    k: usize,
}

impl Cursor {
    pub(crate) fn new(toks: Vec<Token>) -> Self {
        Cursor { toks, k: 0 }
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.toks[self.k]
    }

    pub(crate) fn peek_tok(&self) -> &Tok {
        &self.toks[self.k].tok
    }

    pub(crate) fn pos(&self) -> Pos {
        self.toks[self.k].pos
    }

    pub(crate) fn bump(&mut self) -> Token {
        let t = self.toks[self.k].clone();
        if self.k + 1 < self.toks.len() {
            self.k += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek_tok() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &Tok, what: &str) -> Result<Pos, DslError> {
        if self.peek_tok() == tok {
            Ok(self.bump().pos)
        } else {
            Err(self.unexpected(what))
        }
    }

    pub(crate) fn ident(&mut self, what: &str) -> Result<(String, Pos), DslError> {
        match self.peek_tok().clone() {
            Tok::Ident(s) => Ok((s, self.bump().pos)),
            _ => Err(self.unexpected(what)),
        }
    }

    pub(crate) fn is_keyword(&self, word: &str) -> bool {
        matches!(self.peek_tok(), Tok::Ident(s) if s == word)
    }

    pub(crate) fn integer(&mut self, what: &str) -> Result<(BigInt, Pos), DslError> {
        match self.peek_tok().clone() {
            Tok::Int(n) => Ok((n, self.bump().pos)),
            _ => Err(self.unexpected(what)),
        }
    }

    pub(crate) fn small_integer(&mut self, what: &str) -> Result<(usize, Pos), DslError> {
        let (n, pos) = self.integer(what)?;
        let v = usize::try_from(&n)
            .ok()
            .filter(|&v| v <= 1 << 20)
            .ok_or_else(|| {
                DslError::new(
                    DslErrorKind::Semantic,
                    pos,
                    format!("{what} `{n}` is too large"),
                )
            })?;
        Ok((v, pos))
    }

    pub(crate) fn unexpected(&self, what: &str) -> DslError {
        DslError::new(
            DslErrorKind::Syntax,
            self.pos(),
            format!("expected {what}, found {}", self.peek_tok().describe()),
        )
    }
}

/// Parses one expression over `gens`, leaving the cursor on the first token after it.
pub(crate) fn parse_expr(cur: &mut Cursor, gens: &[Generator]) -> Result<Polynomial, DslError> {
    Parser {
        cur,
        gens,
        depth: 0,
    }
    .sum()
}

struct Parser<'a> {
    cur: &'a mut Cursor,
    gens: &'a [Generator],
    depth: usize,
}

impl Parser<'_> {
    fn sum(&mut self) -> Result<Polynomial, DslError> {
        let mut acc = self.product()?;
        loop {
            if self.cur.eat(&Tok::Plus) {
                acc = acc.add(&self.product()?);
            } else if self.cur.eat(&Tok::Minus) {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
            self.check_size(&acc, self.cur.pos())?;
        }
    }

    fn product(&mut self) -> Result<Polynomial, DslError> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.cur.pos();
            if self.cur.eat(&Tok::Star) {
                let rhs = self.unary()?;
                if max_exponent(&acc) + max_exponent(&rhs) > MAX_TOTAL_EXPONENT {
                    return Err(too_large(pos));
                }
                acc = acc.mul(&rhs, self.gens);
                self.check_size(&acc, pos)?;
            } else if self.cur.eat(&Tok::Slash) {
                let rhs = self.unary()?;
                let c = constant_value(&rhs).ok_or_else(|| {
                    DslError::new(DslErrorKind::Syntax, pos, "can only divide by a number")
                })?;
                if c.is_zero() {
                    return Err(DslError::new(
                        DslErrorKind::Semantic,
                        pos,
                        "division by zero",
                    ));
                }
                acc = acc.scale(&(Q::one() / c));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, DslError> {
        if self.cur.peek_tok() == &Tok::Minus {
            let pos = self.cur.bump().pos;
            self.enter(pos)?;
            let p = self.unary()?.neg();
            self.depth -= 1;
            return Ok(p);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, DslError> {
        let base = self.atom()?;
        let pos = self.cur.pos();
        if !self.cur.eat(&Tok::Caret) {
            return Ok(base);
        }
        let (e, epos) = self.cur.integer("an integer exponent")?;
        let e = u64::try_from(&e).unwrap_or(u64::MAX);
        if e > MAX_TOTAL_EXPONENT || max_exponent(&base).saturating_mul(e) > MAX_TOTAL_EXPONENT {
            return Err(too_large(epos));
        }
        if self.cur.peek_tok() == &Tok::Caret {
            return Err(DslError::new(
                DslErrorKind::Syntax,
                self.cur.pos(),
                "chained exponents need parentheses",
            ));
        }
        let p = base.pow(e as u32, self.gens);
        self.check_size(&p, pos)?;
        Ok(p)
    }

    fn atom(&mut self) -> Result<Polynomial, DslError> {
        let n = self.gens.len();
        let t = self.cur.peek().clone();
        match t.tok {
            Tok::Int(v) => {
                self.cur.bump();
                Ok(Polynomial::constant(n, Q::from_integer(v)))
            }
            Tok::Ident(name) => {
                self.cur.bump();
                let idx = self
                    .gens
                    .iter()
                    .position(|g| g.name == name)
                    .ok_or_else(|| {
                        DslError::new(
                            DslErrorKind::UnknownIdentifier(name.clone()),
                            t.pos,
                            format!("unknown identifier `{name}`"),
                        )
                    })?;
                Ok(Polynomial::generator(n, idx))
            }
            Tok::LParen => {
                self.cur.bump();
                self.enter(t.pos)?;
                let p = self.sum()?;
                self.depth -= 1;
                self.cur.expect(&Tok::RParen, "`)`")?;
                Ok(p)
            }
            _ => Err(self.cur.unexpected("an expression")),
        }
    }

    fn enter(&mut self, pos: Pos) -> Result<(), DslError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            return Err(DslError::new(
                DslErrorKind::Semantic,
                pos,
                "expression nested too deeply",
            ));
        }
        Ok(())
    }

    fn check_size(&self, p: &Polynomial, pos: Pos) -> Result<(), DslError> {
        if p.num_terms() > MAX_TERMS {
            return Err(too_large(pos));
        }
        Ok(())
    }
}

fn too_large(pos: Pos) -> DslError {
    DslError::new(DslErrorKind::Semantic, pos, "expression too large")
}

fn max_exponent(p: &Polynomial) -> u64 {
    p.terms()
        .map(|(m, _)| m.exponents().iter().map(|&e| e as u64).sum::<u64>())
        .max()
        .unwrap_or(0)
}

fn constant_value(p: &Polynomial) -> Option<Q> {
    match p.terms().collect::<Vec<_>>().as_slice() {
        [] => Some(Q::zero()),
        [(m, c)] if m.is_one() => Some((*c).clone()),
        _ => None,
    }
}
