//! Recursive-descent parser over characters.
//!
//! ```text
//! doc      := {flipdecl} formula
//! flipdecl := "flip" IDENT "k" "=" NAT ["symmetric"] "{" [pair {";" pair} [";"]] "}"
//! pair     := pattern "~" pattern
//! pattern  := "(" "eq" "=" PAT "," "adj" "=" PAT ["," "color" "=" SIGN IDENT {"," SIGN IDENT}] ")"
//! formula  := quant | implic
//! quant    := ("exists" | "forall") IDENT "." formula
//!           | ("existsSet" | "forallSet") IDENT ":" NAT "." formula
//! implic   := disj ["->" implic]
//! disj     := conj {"\/" conj}
//! conj     := neg {"/\" neg}
//! neg      := "~" neg | quant | atom
//! atom     := "(" formula ")" | "E" "(" v "," v ")" | v "=" v | IDENT "(" v ")" | v "in" IDENT
//!           | "conn" "(" v "," v ";" [vlist] ")"
//!           | ("flipconn" | "flipreach") "<" IDENT ">" "(" v "," v ";" [vlist] ")"
//! ```
//!
//! `PAT` is a possibly empty word over `0`, `1`, `*`; `#` starts a comment.

use crate::flip::{ColorConstraint, FlipSpec, Pattern, Tri};

use super::ast::{Document, Formula, Pos, Quantifier};
use super::{Diagnostic, DiagnosticCode};

const KEYWORDS: [&str; 10] = [
    "exists",
    "forall",
    "existsSet",
    "forallSet",
    "in",
    "conn",
    "flipconn",
    "flipreach",
    "flip",
    "symmetric",
];

type PResult<T> = Result<T, Diagnostic>;

struct Parser {
    chars: Vec<char>,
    positions: Vec<Pos>,
    i: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl Parser {
    fn new(text: &str) -> Self {
        let chars: Vec<char> = text.chars().collect();
        let mut positions = Vec::with_capacity(chars.len() + 1);
        let (mut line, mut col) = (1, 1);
        for &c in &chars {
            positions.push(Pos { line, col });
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        positions.push(Pos { line, col });
        Parser {
            chars,
            positions,
            i: 0,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.i) {
            if c.is_whitespace() {
                self.i += 1;
            } else if c == '#' {
                while self.chars.get(self.i).is_some_and(|&c| c != '\n') {
                    self.i += 1;
                }
            } else {
                break;
            }
        }
    }

    fn pos(&mut self) -> Pos {
        self.skip_ws();
        self.positions[self.i]
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.i).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn looking_at(&mut self, s: &str) -> bool {
        self.skip_ws();
        let mut j = self.i;
        for c in s.chars() {
            if self.chars.get(j) != Some(&c) {
                return false;
            }
            j += 1;
        }
        true
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.looking_at(s) {
            self.i += s.chars().count();
            true
        } else {
            false
        }
    }

    fn looking_at_keyword(&mut self, kw: &str) -> bool {
        self.looking_at(kw)
            && !self
                .chars
                .get(self.i + kw.len())
                .is_some_and(|&c| is_ident_char(c))
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if self.looking_at_keyword(kw) {
            self.i += kw.len();
            true
        } else {
            false
        }
    }

    fn error(&mut self, expected: &str) -> Diagnostic {
        let pos = self.pos();
        let found = match self.chars.get(self.i) {
            Some(c) => format!("`{c}`"),
            None => "end of input".to_string(),
        };
        Diagnostic::new(
            DiagnosticCode::SyntaxError,
            pos,
            format!("expected {expected}, found {found}"),
        )
    }

    fn expect(&mut self, s: &str) -> PResult<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(&format!("`{s}`")))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<()> {
        if self.eat_keyword(kw) {
            Ok(())
        } else {
            Err(self.error(&format!("`{kw}`")))
        }
    }

    fn peek_ident(&mut self) -> Option<String> {
        self.skip_ws();
        if !self.chars.get(self.i).is_some_and(|&c| is_ident_start(c)) {
            return None;
        }
        let end = (self.i..self.chars.len())
            .find(|&j| !is_ident_char(self.chars[j]))
            .unwrap_or(self.chars.len());
        Some(self.chars[self.i..end].iter().collect())
    }

    /// An identifier that is not a keyword.
    fn ident(&mut self, what: &str) -> PResult<String> {
        match self.peek_ident() {
            Some(id) if !KEYWORDS.contains(&id.as_str()) => {
                self.i += id.len();
                Ok(id)
            }
            _ => Err(self.error(what)),
        }
    }

    fn nat(&mut self) -> PResult<usize> {
        self.skip_ws();
        let start = self.i;
        while self.chars.get(self.i).is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        let digits: String = self.chars[start..self.i].iter().collect();
        if digits.is_empty() {
            return Err(self.error("a natural number"));
        }
        digits.parse().map_err(|_| {
            Diagnostic::new(
                DiagnosticCode::SyntaxError,
                self.positions[start],
                format!("number `{digits}` is too large"),
            )
        })
    }

    fn document(&mut self) -> PResult<Document> {
        let mut flips = Vec::new();
        let mut flip_pos = Vec::new();
        while self.looking_at_keyword("flip") {
            flip_pos.push(self.pos());
            flips.push(self.flip_decl()?);
        }
        let formula = self.formula()?;
        if !self.at_end() {
            return Err(self.error("end of input"));
        }
        Ok(Document {
            flips,
            flip_pos,
            formula,
            free_vertex: Vec::new(),
            free_sets: Vec::new(),
        })
    }

    fn flip_decl(&mut self) -> PResult<FlipSpec> {
        self.expect_keyword("flip")?;
        let name = self.ident("a flip name")?;
        self.expect_keyword("k")?;
        self.expect("=")?;
        let k = self.nat()?;
        let symmetric = self.eat_keyword("symmetric");
        self.expect("{")?;
        let mut pairs = Vec::new();
        loop {
            if self.eat("}") {
                break;
            }
            let left = self.pattern(k)?;
            self.expect("~")?;
            let right = self.pattern(k)?;
            pairs.push((left, right));
            if !self.eat(";") {
                self.expect("}")?;
                break;
            }
        }
        Ok(FlipSpec::new(name, k, symmetric, pairs).expect("pattern lengths checked while parsing"))
    }

    fn pattern(&mut self, k: usize) -> PResult<Pattern> {
        self.expect("(")?;
        self.expect_keyword("eq")?;
        self.expect("=")?;
        let eq = self.tri_word(k)?;
        self.expect(",")?;
        self.expect_keyword("adj")?;
        self.expect("=")?;
        let adj = self.tri_word(k)?;
        let mut colors = Vec::new();
        if self.eat(",") {
            self.expect_keyword("color")?;
            self.expect("=")?;
            loop {
                let present = if self.eat("+") {
                    true
                } else if self.eat("-") {
                    false
                } else {
                    return Err(self.error("`+` or `-` before a color name"));
                };
                let name = self.ident("a color name")?;
                colors.push(ColorConstraint { name, present });
                if !self.eat(",") {
                    break;
                }
            }
        }
        self.expect(")")?;
        Ok(Pattern { eq, adj, colors })
    }

    fn tri_word(&mut self, k: usize) -> PResult<Vec<Tri>> {
        let pos = self.pos();
        let mut word = Vec::new();
        while let Some(t) = self.chars.get(self.i).and_then(|&c| Tri::from_char(c)) {
            word.push(t);
            self.i += 1;
        }
        if word.len() != k {
            return Err(Diagnostic::new(
                DiagnosticCode::ArityMismatch,
                pos,
                format!("pattern has length {}, expected k = {k}", word.len()),
            ));
        }
        Ok(word)
    }

    fn formula(&mut self) -> PResult<Formula> {
        if let Some(f) = self.quant()? {
            return Ok(f);
        }
        self.implic()
    }

    fn quant(&mut self) -> PResult<Option<Formula>> {
        let pos = self.pos();
        for (kw, q, set) in [
            ("existsSet", Quantifier::Exists, true),
            ("forallSet", Quantifier::Forall, true),
            ("exists", Quantifier::Exists, false),
            ("forall", Quantifier::Forall, false),
        ] {
            if !self.eat_keyword(kw) {
                continue;
            }
            if set {
                let var = self.ident("a set variable")?;
                self.expect(":")?;
                let rank = self.nat()?;
                self.expect(".")?;
                let body = Box::new(self.formula()?);
                return Ok(Some(Formula::SetQuant {
                    q,
                    var,
                    rank,
                    body,
                    pos,
                }));
            }
            let var = self.ident("a vertex variable")?;
            self.expect(".")?;
            let body = Box::new(self.formula()?);
            return Ok(Some(Formula::VertexQuant { q, var, body, pos }));
        }
        Ok(None)
    }

    fn implic(&mut self) -> PResult<Formula> {
        let left = self.disj()?;
        if self.eat("->") {
            let right = self.implic()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn disj(&mut self) -> PResult<Formula> {
        let mut f = self.conj()?;
        while self.eat("\\/") {
            f = Formula::or(f, self.conj()?);
        }
        Ok(f)
    }

    fn conj(&mut self) -> PResult<Formula> {
        let mut f = self.neg()?;
        while self.eat("/\\") {
            f = Formula::and(f, self.neg()?);
        }
        Ok(f)
    }

    fn neg(&mut self) -> PResult<Formula> {
        if self.eat("~") {
            return Ok(Formula::not(self.neg()?));
        }
        if let Some(f) = self.quant()? {
            return Ok(f);
        }
        self.atom()
    }

    fn args(&mut self) -> PResult<(String, String, Vec<String>)> {
        self.expect("(")?;
        let s = self.ident("a vertex variable")?;
        self.expect(",")?;
        let t = self.ident("a vertex variable")?;
        self.expect(";")?;
        let mut list = Vec::new();
        if !self.eat(")") {
            loop {
                list.push(self.ident("a vertex variable")?);
                if !self.eat(",") {
                    break;
                }
            }
            self.expect(")")?;
        }
        Ok((s, t, list))
    }

    fn atom(&mut self) -> PResult<Formula> {
        let pos = self.pos();
        if self.eat("(") {
            let f = self.formula()?;
            self.expect(")")?;
            return Ok(f);
        }
        if self.eat_keyword("conn") {
            let (s, t, avoid) = self.args()?;
            return Ok(Formula::Conn { s, t, avoid, pos });
        }
        for (kw, reach) in [("flipconn", false), ("flipreach", true)] {
            if !self.eat_keyword(kw) {
                continue;
            }
            self.expect("<")?;
            let spec = self.ident("a flip name")?;
            self.expect(">")?;
            let (s, t, params) = self.args()?;
            return Ok(if reach {
                Formula::FlipReach {
                    spec,
                    s,
                    t,
                    params,
                    pos,
                }
            } else {
                Formula::FlipConn {
                    spec,
                    s,
                    t,
                    params,
                    pos,
                }
            });
        }
        let id = self.ident("a formula")?;
        if self.eat("(") {
            let x = self.ident("a vertex variable")?;
            if id == "E" {
                self.expect(",")?;
                let y = self.ident("a vertex variable")?;
                self.expect(")")?;
                return Ok(Formula::Edge { x, y, pos });
            }
            self.expect(")")?;
            return Ok(Formula::Color { name: id, x, pos });
        }
        if self.eat("=") {
            let y = self.ident("a vertex variable")?;
            return Ok(Formula::Eq { x: id, y, pos });
        }
        if self.eat_keyword("in") {
            let set = self.ident("a set variable")?;
            return Ok(Formula::In { x: id, set, pos });
        }
        Err(self.error("`=`, `in` or `(`"))
    }
}

/// Parses a document without static checks.
pub fn parse_document(text: &str) -> Result<Document, Diagnostic> {
    Parser::new(text).document()
}

/// Parses a file holding only flip declarations.
pub fn parse_flip_specs(text: &str) -> Result<Vec<FlipSpec>, Diagnostic> {
    let mut p = Parser::new(text);
    let mut out = Vec::new();
    while !p.at_end() {
        out.push(p.flip_decl()?);
    }
    Ok(out)
}
