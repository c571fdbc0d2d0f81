//! The `.cut` scenario format and report rendering.
//!
//! A scenario file declares algebras by presentation, maps between them by generator images,
//! and one `cut` block naming the inputs. Optional `iso` blocks claim presentations of the
//! computed rings and an `expect` block holds golden dimensions:
//!
//! ```text
//! algebra Cminus { gen a:2; rel a^3; top 4; }
//! algebra M { gen u:2; rel u^3; top 4; }
//! algebra Mminus { top 4; }
//! map p: Cminus -> Mminus { a -> 0; }
//! map i: M -> Mminus { u -> 0; }
//! cut {
//!   minus = Cminus; total = M; common = Mminus; p = p; i = i; n = 4;
//!   delta = [ {cminus: a^2, m: u^2} ];
//!   pd = a;
//!   name x = {cminus: a, m: 0};
//! }
//! ```
//!
//! Expressions use `+ -`, `*`, `/` by a number, `^` by a non-negative integer and
//! parentheses. Coefficients are exact rationals; decimal literals are refused.

mod build;
mod corpus;
mod doc;
mod expr;
mod lexer;
mod parser;
mod report;

pub use build::{parse_scenario, parse_scenario_with, BuildOptions, ScenarioError};
pub use corpus::{bundled_examples, BLOWUP_CP2, FLAG_U3};
pub use doc::{AlgebraDecl, CutDecl, IsoDecl, MapDecl, PairDecl, ScenarioDoc};
pub use parser::parse_doc;
pub use report::{
    emit_betti, emit_isos, emit_presentations, emit_reduction, emit_report, emit_validation,
    Format, SCHEMA_VERSION,
};

use std::fmt;

use thiserror::Error;

use crate::graded::{Generator, GradedError, Polynomial};

/// 1-based source position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DslErrorKind {
    Syntax,
    UnknownIdentifier(String),
    InhomogeneousRelation,
    DegreeMismatch,
    Duplicate(String),
    /// Well-formed text that does not describe a usable scenario.
    Semantic,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct DslError {
    pub kind: DslErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl DslError {
    pub(crate) fn new(kind: DslErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        DslError {
            kind,
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }

    pub fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            col: self.col,
        }
    }
}

impl From<DslError> for GradedError {
    fn from(e: DslError) -> Self {
        match e.kind {
            DslErrorKind::UnknownIdentifier(name) => GradedError::UnknownGenerator { name },
            _ => GradedError::Expression {
                text: e.pos().to_string(),
                message: e.message,
            },
        }
    }
}

/// Parses a single polynomial over `gens`, e.g. `"u*v - u^2 - 1/2*v^2"`.
pub fn parse_polynomial(text: &str, gens: &[Generator]) -> Result<Polynomial, DslError> {
    let mut cur = expr::Cursor::new(lexer::tokenize(text)?);
    let p = expr::parse_expr(&mut cur, gens)?;
    if cur.peek_tok() != &lexer::Tok::Eof {
        return Err(cur.unexpected("an operator or end of input"));
    }
    Ok(p)
}
