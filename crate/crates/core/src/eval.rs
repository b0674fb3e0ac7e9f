//! Model checking and the compilations between the logics.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flip::{apply_flip, FlipSpec, Pattern, Tri, TypeClasses};
use crate::graph::{ColoredGraph, Digraph};
use crate::logic::{Document, Formula, Pos, Quantifier};
use crate::lowrank::{brute_lowrank, lowrank_via_suffixes, DEFAULT_BRUTE_MAX_N, DEFAULT_SUFFIX_CAP};
use crate::rank::cutrank;
use crate::scc::{condense, SccCondensation};
use crate::vset::VertexSet;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub vertices: BTreeMap<String, usize>,
    pub sets: BTreeMap<String, VertexSet>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertex(mut self, var: impl Into<String>, v: usize) -> Self {
        self.vertices.insert(var.into(), v);
        self
    }

    pub fn with_set(mut self, var: impl Into<String>, x: VertexSet) -> Self {
        self.sets.insert(var.into(), x);
        self
    }
}

/// How set quantifiers `∃X : r` enumerate their candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LowRankStrategy {
    /// Every subset, filtered by cutrank.
    Brute,
    /// The union of suffixes of `H_ā` over all parameter pairs.
    Suffix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalConfig {
    pub strategy: LowRankStrategy,
    /// Largest graph order for the brute-force strategy.
    pub subset_cap: usize,
    pub suffix_cap: usize,
    pub trace: bool,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            strategy: LowRankStrategy::Suffix,
            subset_cap: DEFAULT_BRUTE_MAX_N,
            suffix_cap: DEFAULT_SUFFIX_CAP,
            trace: false,
        }
    }
}

impl EvalConfig {
    pub fn with_strategy(strategy: LowRankStrategy) -> Self {
        EvalConfig {
            strategy,
            ..Self::default()
        }
    }
}

type FlipKey = (String, Vec<usize>);

struct FlipData {
    digraph: Digraph,
    cond: SccCondensation,
}

#[derive(Serialize)]
struct TraceLine<'a> {
    quantifier: &'a str,
    var: &'a str,
    value: serde_json::Value,
    result: bool,
}

/// Evaluates formulas of one document on one graph, caching flips and
/// low-rank candidate families across calls.
pub struct Evaluator<'a> {
    g: &'a ColoredGraph,
    doc: &'a Document,
    cfg: EvalConfig,
    flips: Mutex<HashMap<FlipKey, Arc<FlipData>>>,
    lowrank: Mutex<HashMap<usize, Arc<Vec<VertexSet>>>>,
    trace: Mutex<Vec<String>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(g: &'a ColoredGraph, doc: &'a Document, cfg: EvalConfig) -> Self {
        Evaluator {
            g,
            doc,
            cfg,
            flips: Mutex::new(HashMap::new()),
            lowrank: Mutex::new(HashMap::new()),
            trace: Mutex::new(Vec::new()),
        }
    }

    pub fn eval(&self, asg: &Assignment) -> Result<bool> {
        let n = self.g.n();
        if let Some(&vertex) = asg.vertices.values().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        if asg.sets.values().any(|x| x.capacity() != n) {
            return Err(Error::BadParameter(format!(
                "set values must be subsets of a graph on {n} vertices"
            )));
        }
        self.eval_formula(&self.doc.formula, &mut asg.clone())
    }

    /// JSON lines, one per quantifier decision, when tracing is enabled.
    pub fn take_trace(&self) -> Vec<String> {
        std::mem::take(&mut *self.trace.lock().expect("trace lock"))
    }

    fn record(&self, quantifier: &str, var: &str, value: serde_json::Value, result: bool) {
        if self.cfg.trace {
            let line = TraceLine {
                quantifier,
                var,
                value,
                result,
            };
            let text = serde_json::to_string(&line).expect("trace line serializes");
            self.trace.lock().expect("trace lock").push(text);
        }
    }

    fn vertex(&self, asg: &Assignment, var: &str) -> Result<usize> {
        asg.vertices
            .get(var)
            .copied()
            .ok_or_else(|| Error::UnboundVariable(var.to_string()))
    }

    fn vertices(&self, asg: &Assignment, vars: &[String]) -> Result<Vec<usize>> {
        vars.iter().map(|v| self.vertex(asg, v)).collect()
    }

    fn candidates(&self, r: usize) -> Result<Arc<Vec<VertexSet>>> {
        if let Some(c) = self.lowrank.lock().expect("cache lock").get(&r) {
            return Ok(c.clone());
        }
        let fam = match self.cfg.strategy {
            LowRankStrategy::Brute => brute_lowrank(self.g, r, self.cfg.subset_cap)?,
            LowRankStrategy::Suffix => lowrank_via_suffixes(self.g, r, self.cfg.suffix_cap)?,
        };
        let sets = Arc::new(fam.sets);
        self.lowrank
            .lock()
            .expect("cache lock")
            .insert(r, sets.clone());
        Ok(sets)
    }

    fn flip(&self, name: &str, params: Vec<usize>, symmetric: bool) -> Result<Arc<FlipData>> {
        let spec = self
            .doc
            .spec(name)
            .ok_or_else(|| Error::BadParameter(format!("no flip named `{name}`")))?;
        if symmetric && !spec.symmetric {
            return Err(Error::SymmetryRequired(name.to_string()));
        }
        let key = (name.to_string(), params);
        if let Some(d) = self.flips.lock().expect("cache lock").get(&key) {
            return Ok(d.clone());
        }
        let digraph = apply_flip(self.g, spec, &key.1)?;
        let cond = condense(&digraph);
        let data = Arc::new(FlipData { digraph, cond });
        self.flips
            .lock()
            .expect("cache lock")
            .insert(key, data.clone());
        Ok(data)
    }

    fn eval_formula(&self, f: &Formula, asg: &mut Assignment) -> Result<bool> {
        Ok(match f {
            Formula::VertexQuant { q, var, body, .. } => {
                let saved = asg.vertices.get(var).copied();
                let want = *q == Quantifier::Exists;
                let mut result = !want;
                for v in 0..self.g.n() {
                    asg.vertices.insert(var.clone(), v);
                    let b = self.eval_formula(body, asg);
                    let b = match b {
                        Ok(b) => b,
                        Err(e) => {
                            restore(&mut asg.vertices, var, saved);
                            return Err(e);
                        }
                    };
                    self.record(quantifier_name(*q, false), var, v.into(), b);
                    if b == want {
                        result = want;
                        break;
                    }
                }
                restore(&mut asg.vertices, var, saved);
                result
            }
            Formula::SetQuant {
                q, var, rank, body, ..
            } => {
                let candidates = self.candidates(*rank)?;
                let saved = asg.sets.get(var).cloned();
                let want = *q == Quantifier::Exists;
                let mut result = !want;
                for x in candidates.iter() {
                    asg.sets.insert(var.clone(), x.clone());
                    let b = match self.eval_formula(body, asg) {
                        Ok(b) => b,
                        Err(e) => {
                            restore(&mut asg.sets, var, saved);
                            return Err(e);
                        }
                    };
                    self.record(quantifier_name(*q, true), var, x.to_vec().into(), b);
                    if b == want {
                        result = want;
                        break;
                    }
                }
                restore(&mut asg.sets, var, saved);
                result
            }
            Formula::Not(a) => !self.eval_formula(a, asg)?,
            Formula::And(a, b) => self.eval_formula(a, asg)? && self.eval_formula(b, asg)?,
            Formula::Or(a, b) => self.eval_formula(a, asg)? || self.eval_formula(b, asg)?,
            Formula::Implies(a, b) => !self.eval_formula(a, asg)? || self.eval_formula(b, asg)?,
            Formula::Edge { x, y, .. } => {
                self.g.has_edge(self.vertex(asg, x)?, self.vertex(asg, y)?)
            }
            Formula::Eq { x, y, .. } => self.vertex(asg, x)? == self.vertex(asg, y)?,
            Formula::Color { name, x, .. } => {
                let v = self.vertex(asg, x)?;
                self.g.color(name).is_some_and(|c| c.contains(v))
            }
            Formula::In { x, set, .. } => {
                let v = self.vertex(asg, x)?;
                asg.sets
                    .get(set)
                    .ok_or_else(|| Error::UnboundVariable(set.clone()))?
                    .contains(v)
            }
            Formula::Conn { s, t, avoid, .. } => {
                let avoid = self.vertices(asg, avoid)?;
                conn(self.g, self.vertex(asg, s)?, self.vertex(asg, t)?, &avoid)
            }
            Formula::FlipConn {
                spec, s, t, params, ..
            }
            | Formula::FlipReach {
                spec, s, t, params, ..
            } => {
                let symmetric = matches!(f, Formula::FlipConn { .. });
                let data = self.flip(spec, self.vertices(asg, params)?, symmetric)?;
                data.cond.leq(self.vertex(asg, s)?, self.vertex(asg, t)?)
            }
        })
    }

    /// The flipped digraph for `spec` under `params`, as used by the predicates.
    pub fn flipped(&self, spec: &str, params: &[usize]) -> Result<Digraph> {
        Ok(self.flip(spec, params.to_vec(), false)?.digraph.clone())
    }
}

fn quantifier_name(q: Quantifier, set: bool) -> &'static str {
    match (q, set) {
        (Quantifier::Exists, false) => "exists",
        (Quantifier::Forall, false) => "forall",
        (Quantifier::Exists, true) => "existsSet",
        (Quantifier::Forall, true) => "forallSet",
    }
}

fn restore<V>(map: &mut BTreeMap<String, V>, var: &str, saved: Option<V>) {
    match saved {
        Some(v) => {
            map.insert(var.to_string(), v);
        }
        None => {
            map.remove(var);
        }
    }
}

/// Evaluates `doc` on `g` under `asg`.
pub fn eval(g: &ColoredGraph, doc: &Document, asg: &Assignment, cfg: &EvalConfig) -> Result<bool> {
    Evaluator::new(g, doc, cfg.clone()).eval(asg)
}

/// Whether a path from `s` to `t` avoids `avoid`. False when an endpoint is
/// avoided; true when `s = t` is not.
pub fn conn(g: &ColoredGraph, s: usize, t: usize, avoid: &[usize]) -> bool {
    if avoid.contains(&s) || avoid.contains(&t) {
        return false;
    }
    let blocked = VertexSet::from_indices(g.n(), avoid.iter().copied());
    g.component_avoiding(s, &blocked).contains(t)
}

/// Symmetric flip removing exactly the edges incident to the `k` parameters.
///
/// Pattern pairs `(aᵢ, neighbour of aᵢ)` and their swaps: a pair `uv` is
/// flipped iff it is an edge with `u` or `v` a parameter.
pub fn compile_conn_to_flipconn(k: usize) -> FlipSpec {
    let at = |i: usize| -> Vec<Tri> {
        (0..k).map(|j| if j == i { Tri::One } else { Tri::Any }).collect()
    };
    let mut pairs = Vec::new();
    for i in 0..k {
        let equal = Pattern {
            eq: at(i),
            adj: vec![Tri::Any; k],
            colors: Vec::new(),
        };
        let adjacent = Pattern {
            eq: vec![Tri::Any; k],
            adj: at(i),
            colors: Vec::new(),
        };
        pairs.push((equal.clone(), adjacent.clone()));
        pairs.push((adjacent, equal));
    }
    FlipSpec {
        name: format!("Avoid{k}"),
        k,
        symmetric: true,
        pairs,
    }
}

/// A symmetric flip read as a directed one; reachability in it is connectivity.
pub fn compile_flipconn_to_flipreach(spec: &FlipSpec) -> Result<FlipSpec> {
    if !spec.symmetric {
        return Err(Error::SymmetryRequired(spec.name.clone()));
    }
    Ok(spec.clone())
}

/// Rewrites every `conn(s, t; ā)` into `s ≠ aᵢ ∧ t ≠ aᵢ ∧ flipconn<Avoid_k>(s, t; ā)`.
pub fn compile_separator_logic(doc: &Document) -> Document {
    let mut out = doc.clone();
    let mut needed = Vec::new();
    out.formula = doc.formula.map_atoms(&mut |atom| match atom {
        Formula::Conn { s, t, avoid, pos } => {
            let spec = compile_conn_to_flipconn(avoid.len());
            let mut parts = Vec::new();
            for a in avoid {
                for end in [s, t] {
                    parts.push(Formula::not(Formula::Eq {
                        x: end.clone(),
                        y: a.clone(),
                        pos: *pos,
                    }));
                }
            }
            parts.push(Formula::FlipConn {
                spec: spec.name.clone(),
                s: s.clone(),
                t: t.clone(),
                params: avoid.clone(),
                pos: *pos,
            });
            needed.push(spec);
            Formula::conjunction(parts).expect("at least the flipconn atom")
        }
        other => other.clone(),
    });
    for spec in needed {
        out.declare(spec);
    }
    out
}

/// Rewrites every `flipconn<F>` into `flipreach<F>`.
pub fn compile_flipconn_logic(doc: &Document) -> Result<Document> {
    let mut out = doc.clone();
    let mut failure = None;
    out.formula = doc.formula.map_atoms(&mut |atom| match atom {
        Formula::FlipConn {
            spec,
            s,
            t,
            params,
            pos,
        } => {
            match doc.spec(spec).map(compile_flipconn_to_flipreach) {
                Some(Err(e)) => failure = Some(e),
                None => failure = Some(Error::BadParameter(format!("no flip named `{spec}`"))),
                Some(Ok(_)) => {}
            }
            Formula::FlipReach {
                spec: spec.clone(),
                s: s.clone(),
                t: t.clone(),
                params: params.clone(),
                pos: *pos,
            }
        }
        other => other.clone(),
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `flipreach(s, t)` fails iff the set reachable from `s` is a suffix
/// (out-closed set) containing `s` but not `t`. Also checks that this
/// witness has at most as many distinct rows as there are realized atomic
/// types, through its cutrank.
pub fn check_freach_suffix_duality(
    g: &ColoredGraph,
    spec: &FlipSpec,
    a: &[usize],
    s: usize,
    t: usize,
) -> Result<bool> {
    let n = g.n();
    for v in [s, t] {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let h = apply_flip(g, spec, a)?;
    let reach = condense(&h).leq(s, t);
    let x = h.reachable_from(s);
    let witness = h.is_suffix(&x) && x.contains(s) && !x.contains(t);
    if reach == witness {
        return Ok(false);
    }
    if witness {
        let types = TypeClasses::of(g, a).len();
        if cutrank(g, &x) > types {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some set of cutrank at most 1 contains every `A`-vertex and no `C`-vertex.
pub const SPLIT_SENTENCE: &str =
    "existsSet X : 1 . (forall x . (A(x) -> x in X)) /\\ (forall y . (C(y) -> ~(y in X)))";

/// The flip-connectivity sentence stating that the complement is connected.
pub fn co_connectivity_document() -> Document {
    let spec = FlipSpec::complement_all(0);
    let pos = Pos::default();
    let formula = Formula::VertexQuant {
        q: Quantifier::Forall,
        var: "s".into(),
        pos,
        body: Box::new(Formula::VertexQuant {
            q: Quantifier::Forall,
            var: "t".into(),
            pos,
            body: Box::new(Formula::FlipConn {
                spec: spec.name.clone(),
                s: "s".into(),
                t: "t".into(),
                params: Vec::new(),
                pos,
            }),
        }),
    };
    let mut doc = Document::new(formula);
    doc.declare(spec);
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, Family};
    use crate::logic::{parse_formula, parse_formula_with_free};

    #[test]
    fn conn_conventions() {
        let g = generators::path(3).unwrap();
        assert!(!conn(&g, 0, 2, &[1]));
        assert!(conn(&g, 0, 2, &[]));
        assert!(!conn(&g, 0, 0, &[0]));
        assert!(conn(&g, 1, 1, &[0]));
        let doc = parse_formula_with_free("conn(s, t; s)", &["s", "t"], &[]).unwrap();
        for s in 0..3 {
            for t in 0..3 {
                let asg = Assignment::new().with_vertex("s", s).with_vertex("t", t);
                assert!(!eval(&g, &doc, &asg, &EvalConfig::default()).unwrap());
            }
        }
    }

    #[test]
    fn compiled_conn_on_path() {
        let g = generators::path(3).unwrap();
        let spec = compile_conn_to_flipconn(1);
        let d = apply_flip(&g, &spec, &[1]).unwrap();
        assert_eq!(d.arc_count(), 0);
        let d = apply_flip(&g, &compile_conn_to_flipconn(0), &[]).unwrap();
        assert_eq!(d, Digraph::from_undirected(&g));
    }

    #[test]
    fn co_connectivity() {
        let doc = co_connectivity_document();
        let cfg = EvalConfig::default();
        let yes = generators::generate(&Family::ComplementOfCycle(6)).unwrap();
        let no = generators::generate(&Family::ComplementOfTwoCycles(6, 6)).unwrap();
        assert!(eval(&yes, &doc, &Assignment::new(), &cfg).unwrap());
        assert!(!eval(&no, &doc, &Assignment::new(), &cfg).unwrap());
        let parsed = parse_formula(
            "flip Comp k=0 symmetric { (eq=, adj=) ~ (eq=, adj=) } forall s . forall t . flipconn<Comp>(s,t;)",
        )
        .unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn strategies_agree_on_distinguishing_sentence() {
        // A and C sit in different components, B bridges nothing
        let g = ColoredGraph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)])
            .unwrap()
            .with_color("A", VertexSet::from_indices(6, [0, 1]))
            .unwrap()
            .with_color("C", VertexSet::from_indices(6, [4, 5]))
            .unwrap();
        let doc = parse_formula(SPLIT_SENTENCE).unwrap();
        for strategy in [LowRankStrategy::Brute, LowRankStrategy::Suffix] {
            let cfg = EvalConfig::with_strategy(strategy);
            assert!(eval(&g, &doc, &Assignment::new(), &cfg).unwrap());
        }
    }

    #[test]
    fn trace_lines_are_json() {
        let g = generators::path(2).unwrap();
        let doc = parse_formula("exists x . exists y . E(x, y)").unwrap();
        let cfg = EvalConfig {
            trace: true,
            ..EvalConfig::default()
        };
        let ev = Evaluator::new(&g, &doc, cfg);
        assert!(ev.eval(&Assignment::new()).unwrap());
        let lines = ev.take_trace();
        assert!(!lines.is_empty());
        for l in lines {
            let v: serde_json::Value = serde_json::from_str(&l).unwrap();
            assert!(v.get("quantifier").is_some());
        }
    }

    #[test]
    fn separator_compilation_preserves_truth() {
        let g = generators::random(6, 0.4, 5).unwrap();
        let doc = parse_formula("forall s . forall t . exists a . conn(s, t; a) \\/ s = t").unwrap();
        let compiled = compile_separator_logic(&doc);
        let reach = compile_flipconn_logic(&compiled).unwrap();
        let cfg = EvalConfig::default();
        let expected = eval(&g, &doc, &Assignment::new(), &cfg).unwrap();
        assert_eq!(eval(&g, &compiled, &Assignment::new(), &cfg).unwrap(), expected);
        assert_eq!(eval(&g, &reach, &Assignment::new(), &cfg).unwrap(), expected);
    }

    #[test]
    fn duality_on_disconnected_graph() {
        let g = ColoredGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let id = FlipSpec::identity(0);
        for s in 0..4 {
            for t in 0..4 {
                assert!(check_freach_suffix_duality(&g, &id, &[], s, t).unwrap());
            }
        }
    }
}
