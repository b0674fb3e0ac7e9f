use std::collections::{BTreeSet, HashSet};

use super::ast::{Document, Formula, Pos};
use super::{Diagnostic, DiagnosticCode};

struct Scope<'a> {
    doc: &'a Document,
    vertex: Vec<String>,
    sets: Vec<String>,
    out: Vec<Diagnostic>,
}

impl Scope<'_> {
    fn vertex_var(&mut self, v: &str, pos: Pos) {
        if !self.vertex.iter().any(|b| b == v) {
            self.out.push(Diagnostic::new(
                DiagnosticCode::UnboundVariable,
                pos,
                format!("vertex variable `{v}` is not bound"),
            ));
        }
    }

    fn spec_use(&mut self, name: &str, params: usize, needs_symmetry: bool, pos: Pos) {
        let Some(spec) = self.doc.spec(name) else {
            self.out.push(Diagnostic::new(
                DiagnosticCode::UnknownFlipSpec,
                pos,
                format!("no flip named `{name}` is declared"),
            ));
            return;
        };
        if spec.k != params {
            self.out.push(Diagnostic::new(
                DiagnosticCode::ArityMismatch,
                pos,
                format!("flip `{name}` takes {} parameters, got {params}", spec.k),
            ));
        }
        if needs_symmetry && !spec.symmetric {
            self.out.push(Diagnostic::new(
                DiagnosticCode::SymmetryRequired,
                pos,
                format!("flipconn needs a symmetric flip, `{name}` is not declared symmetric"),
            ));
        }
    }

    fn check(&mut self, f: &Formula) {
        match f {
            Formula::VertexQuant { var, body, .. } => {
                self.vertex.push(var.clone());
                self.check(body);
                self.vertex.pop();
            }
            Formula::SetQuant { var, body, .. } => {
                self.sets.push(var.clone());
                self.check(body);
                self.sets.pop();
            }
            Formula::Not(a) => self.check(a),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                self.check(a);
                self.check(b);
            }
            Formula::Edge { x, y, pos } | Formula::Eq { x, y, pos } => {
                self.vertex_var(x, *pos);
                self.vertex_var(y, *pos);
            }
            Formula::Color { x, pos, .. } => self.vertex_var(x, *pos),
            Formula::In { x, set, pos } => {
                self.vertex_var(x, *pos);
                if !self.sets.iter().any(|b| b == set) {
                    self.out.push(Diagnostic::new(
                        DiagnosticCode::UnboundVariable,
                        *pos,
                        format!("set variable `{set}` is not bound"),
                    ));
                }
            }
            Formula::Conn { s, t, avoid, pos } => {
                for v in [s, t].into_iter().chain(avoid) {
                    self.vertex_var(v, *pos);
                }
            }
            Formula::FlipConn {
                spec,
                s,
                t,
                params,
                pos,
            }
            | Formula::FlipReach {
                spec,
                s,
                t,
                params,
                pos,
            } => {
                for v in [s, t].into_iter().chain(params) {
                    self.vertex_var(v, *pos);
                }
                let symmetric = matches!(f, Formula::FlipConn { .. });
                self.spec_use(spec, params.len(), symmetric, *pos);
            }
        }
    }
}

/// Static checks: unique flip names, bound variables, known flips of the
/// right arity, symmetric flips under `flipconn`. Empty iff the document is well formed.
pub fn validate(doc: &Document) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut names = HashSet::new();
    for (i, spec) in doc.flips.iter().enumerate() {
        if !names.insert(spec.name.as_str()) {
            out.push(Diagnostic::new(
                DiagnosticCode::DuplicateFlipSpec,
                doc.flip_pos.get(i).copied().unwrap_or_default(),
                format!("flip `{}` is declared twice", spec.name),
            ));
        }
    }
    let mut scope = Scope {
        doc,
        vertex: doc.free_vertex.clone(),
        sets: doc.free_sets.clone(),
        out,
    };
    scope.check(&doc.formula);
    scope.out
}

/// Free vertex and set variables of `f`, in sorted order.
pub fn free_variables(f: &Formula) -> (BTreeSet<String>, BTreeSet<String>) {
    fn go(
        f: &Formula,
        bound_v: &mut Vec<String>,
        bound_s: &mut Vec<String>,
        out: &mut (BTreeSet<String>, BTreeSet<String>),
    ) {
        fn vertex(v: &String, bound_v: &[String], out: &mut (BTreeSet<String>, BTreeSet<String>)) {
            if !bound_v.contains(v) {
                out.0.insert(v.clone());
            }
        }
        match f {
            Formula::VertexQuant { var, body, .. } => {
                bound_v.push(var.clone());
                go(body, bound_v, bound_s, out);
                bound_v.pop();
            }
            Formula::SetQuant { var, body, .. } => {
                bound_s.push(var.clone());
                go(body, bound_v, bound_s, out);
                bound_s.pop();
            }
            Formula::Not(a) => go(a, bound_v, bound_s, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                go(a, bound_v, bound_s, out);
                go(b, bound_v, bound_s, out);
            }
            Formula::Edge { x, y, .. } | Formula::Eq { x, y, .. } => {
                vertex(x, bound_v, out);
                vertex(y, bound_v, out);
            }
            Formula::Color { x, .. } => vertex(x, bound_v, out),
            Formula::In { x, set, .. } => {
                vertex(x, bound_v, out);
                if !bound_s.contains(set) {
                    out.1.insert(set.clone());
                }
            }
            Formula::Conn { s, t, avoid: list, .. }
            | Formula::FlipConn { s, t, params: list, .. }
            | Formula::FlipReach { s, t, params: list, .. } => {
                for v in [s, t].into_iter().chain(list) {
                    vertex(v, bound_v, out);
                }
            }
        }
    }
    let mut out = (BTreeSet::new(), BTreeSet::new());
    go(f, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}
