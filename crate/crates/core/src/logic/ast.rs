use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use crate::flip::FlipSpec;

/// Source position (1-based). Positions never take part in equality, so
/// formulas parsed from differently laid out text compare equal.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

impl Hash for Pos {
    fn hash<H: Hasher>(&self, _: &mut H) {}
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantifier {
    Exists,
    Forall,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    VertexQuant {
        q: Quantifier,
        var: String,
        body: Box<Formula>,
        pos: Pos,
    },
    /// Quantification over sets of cutrank at most `rank`.
    SetQuant {
        q: Quantifier,
        var: String,
        rank: usize,
        body: Box<Formula>,
        pos: Pos,
    },
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Edge {
        x: String,
        y: String,
        pos: Pos,
    },
    Eq {
        x: String,
        y: String,
        pos: Pos,
    },
    Color {
        name: String,
        x: String,
        pos: Pos,
    },
    In {
        x: String,
        set: String,
        pos: Pos,
    },
    /// A path from `s` to `t` avoiding `avoid`.
    Conn {
        s: String,
        t: String,
        avoid: Vec<String>,
        pos: Pos,
    },
    FlipConn {
        spec: String,
        s: String,
        t: String,
        params: Vec<String>,
        pos: Pos,
    },
    FlipReach {
        spec: String,
        s: String,
        t: String,
        params: Vec<String>,
        pos: Pos,
    },
}

impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Conjunction of `parts`; `None` when empty.
    pub fn conjunction(parts: Vec<Formula>) -> Option<Formula> {
        parts.into_iter().reduce(Formula::and)
    }

    pub fn is_atomic(&self) -> bool {
        !matches!(
            self,
            Formula::VertexQuant { .. }
                | Formula::SetQuant { .. }
                | Formula::Not(_)
                | Formula::And(..)
                | Formula::Or(..)
                | Formula::Implies(..)
        )
    }

    /// Largest rank annotation of a set quantifier, if any.
    pub fn max_rank(&self) -> Option<usize> {
        match self {
            Formula::SetQuant { rank, body, .. } => {
                Some(body.max_rank().map_or(*rank, |r| r.max(*rank)))
            }
            Formula::VertexQuant { body, .. } | Formula::Not(body) => body.max_rank(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                match (a.max_rank(), b.max_rank()) {
                    (Some(x), Some(y)) => Some(x.max(y)),
                    (x, y) => x.or(y),
                }
            }
            _ => None,
        }
    }

    /// Names of the flip specs referenced by the formula.
    pub fn referenced_specs(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::FlipConn { spec, .. } | Formula::FlipReach { spec, .. } = f {
                out.insert(spec.clone());
            }
        });
        out
    }

    /// Calls `f` on every subformula, parents before children.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::VertexQuant { body, .. }
            | Formula::SetQuant { body, .. }
            | Formula::Not(body) => body.visit(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => {}
        }
    }

    /// Rebuilds the formula bottom-up, replacing each atom by `f(atom)`.
    pub fn map_atoms(&self, f: &mut impl FnMut(&Formula) -> Formula) -> Formula {
        match self {
            Formula::VertexQuant { q, var, body, pos } => Formula::VertexQuant {
                q: *q,
                var: var.clone(),
                body: Box::new(body.map_atoms(f)),
                pos: *pos,
            },
            Formula::SetQuant {
                q,
                var,
                rank,
                body,
                pos,
            } => Formula::SetQuant {
                q: *q,
                var: var.clone(),
                rank: *rank,
                body: Box::new(body.map_atoms(f)),
                pos: *pos,
            },
            Formula::Not(a) => Formula::not(a.map_atoms(f)),
            Formula::And(a, b) => Formula::and(a.map_atoms(f), b.map_atoms(f)),
            Formula::Or(a, b) => Formula::or(a.map_atoms(f), b.map_atoms(f)),
            Formula::Implies(a, b) => Formula::implies(a.map_atoms(f), b.map_atoms(f)),
            atom => f(atom),
        }
    }
}

/// Flip declarations followed by a formula, with its declared free variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub flips: Vec<FlipSpec>,
    pub flip_pos: Vec<Pos>,
    pub formula: Formula,
    pub free_vertex: Vec<String>,
    pub free_sets: Vec<String>,
}

impl Document {
    pub fn new(formula: Formula) -> Self {
        Document {
            flips: Vec::new(),
            flip_pos: Vec::new(),
            formula,
            free_vertex: Vec::new(),
            free_sets: Vec::new(),
        }
    }

    pub fn spec(&self, name: &str) -> Option<&FlipSpec> {
        self.flips.iter().find(|s| s.name == name)
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vertex.is_empty() && self.free_sets.is_empty()
    }

    /// Adds `spec` unless a spec of that name is already declared.
    pub fn declare(&mut self, spec: FlipSpec) {
        if self.spec(&spec.name).is_none() {
            self.flips.push(spec);
            self.flip_pos.push(Pos::default());
        }
    }
}
