//! Formulas of low rank MSO, separator logic and the flip logics.

mod ast;
mod parser;
mod print;
mod validate;

use std::fmt;

use serde::Serialize;

pub use ast::{Document, Formula, Pos, Quantifier};
pub use parser::{parse_document, parse_flip_specs};
pub use validate::{free_variables, validate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DiagnosticCode {
    SyntaxError,
    UnknownFlipSpec,
    ArityMismatch,
    UnboundVariable,
    SymmetryRequired,
    DuplicateFlipSpec,
}

impl fmt::Display for DiagnosticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
    pub line: usize,
    pub col: usize,
}

impl Diagnostic {
    pub(crate) fn new(code: DiagnosticCode, pos: Pos, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            message: message.into(),
            line: pos.line,
            col: pos.col,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.col, self.code, self.message)
    }
}

/// Parses a closed document and runs every static check, failing on the first diagnostic.
pub fn parse_formula(text: &str) -> Result<Document, Diagnostic> {
    parse_formula_with_free(text, &[], &[])
}

/// Like [`parse_formula`], with the given vertex and set variables allowed to occur free.
pub fn parse_formula_with_free(
    text: &str,
    vertex_vars: &[&str],
    set_vars: &[&str],
) -> Result<Document, Diagnostic> {
    let mut doc = parse_document(text)?;
    doc.free_vertex = vertex_vars.iter().map(|s| s.to_string()).collect();
    doc.free_sets = set_vars.iter().map(|s| s.to_string()).collect();
    match validate(&doc).into_iter().next() {
        Some(d) => Err(d),
        None => Ok(doc),
    }
}
