//! Fully parenthesized printing; parsing the output gives back the same formula.

use std::fmt;

use super::ast::{Document, Formula, Quantifier};

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantifier::Exists => "exists",
            Quantifier::Forall => "forall",
        })
    }
}

fn args(f: &mut fmt::Formatter<'_>, s: &str, t: &str, list: &[String]) -> fmt::Result {
    write!(f, "({s}, {t}; {})", list.join(", "))
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::VertexQuant { q, var, body, .. } => write!(f, "({q} {var} . {body})"),
            Formula::SetQuant {
                q, var, rank, body, ..
            } => write!(f, "({q}Set {var} : {rank} . {body})"),
            Formula::Not(a) => write!(f, "(~{a})"),
            Formula::And(a, b) => write!(f, "({a} /\\ {b})"),
            Formula::Or(a, b) => write!(f, "({a} \\/ {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
            Formula::Edge { x, y, .. } => write!(f, "E({x}, {y})"),
            Formula::Eq { x, y, .. } => write!(f, "{x} = {y}"),
            Formula::Color { name, x, .. } => write!(f, "{name}({x})"),
            Formula::In { x, set, .. } => write!(f, "{x} in {set}"),
            Formula::Conn { s, t, avoid, .. } => {
                write!(f, "conn")?;
                args(f, s, t, avoid)
            }
            Formula::FlipConn {
                spec, s, t, params, ..
            } => {
                write!(f, "flipconn<{spec}>")?;
                args(f, s, t, params)
            }
            Formula::FlipReach {
                spec, s, t, params, ..
            } => {
                write!(f, "flipreach<{spec}>")?;
                args(f, s, t, params)
            }
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for spec in &self.flips {
            writeln!(f, "{spec}")?;
        }
        write!(f, "{}", self.formula)
    }
}
