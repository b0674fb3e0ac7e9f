//! Atomic types, A-flips and S-operations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Digraph};
use crate::vset::VertexSet;

/// Equality, adjacency and color profile of a vertex relative to a parameter tuple.
///
/// Relations among the parameters themselves are shared by every vertex of
/// the same context and are not stored here.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomicType {
    pub eq: VertexSet,
    pub adj: VertexSet,
    pub colors: Vec<String>,
}

impl AtomicType {
    pub fn k(&self) -> usize {
        self.eq.capacity()
    }
}

fn check_params(g: &ColoredGraph, params: &[usize]) -> Result<()> {
    match params.iter().find(|&&p| p >= g.n()) {
        Some(&vertex) => Err(Error::VertexOutOfRange { vertex, n: g.n() }),
        None => Ok(()),
    }
}

pub fn atomic_type(g: &ColoredGraph, v: usize, params: &[usize]) -> AtomicType {
    let k = params.len();
    AtomicType {
        eq: VertexSet::from_indices(k, (0..k).filter(|&i| params[i] == v)),
        adj: VertexSet::from_indices(k, (0..k).filter(|&i| g.has_edge(v, params[i]))),
        colors: g.colors_of(v),
    }
}

/// Partition of the vertices into atomic-type classes.
#[derive(Clone, Debug)]
pub struct TypeClasses {
    /// Realized types, in order of first appearance by vertex index.
    pub types: Vec<AtomicType>,
    pub class_of: Vec<usize>,
    pub members: Vec<VertexSet>,
}

impl TypeClasses {
    pub fn of(g: &ColoredGraph, params: &[usize]) -> Self {
        let n = g.n();
        let mut index: HashMap<AtomicType, usize> = HashMap::new();
        let mut types = Vec::new();
        let mut members: Vec<VertexSet> = Vec::new();
        let mut class_of = Vec::with_capacity(n);
        for v in 0..n {
            let t = atomic_type(g, v, params);
            let c = *index.entry(t.clone()).or_insert_with(|| {
                types.push(t);
                members.push(VertexSet::empty(n));
                types.len() - 1
            });
            members[c].insert(v);
            class_of.push(c);
        }
        TypeClasses {
            types,
            class_of,
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Tri {
    Zero,
    One,
    Any,
}

impl Tri {
    pub fn matches(self, bit: bool) -> bool {
        match self {
            Tri::Zero => !bit,
            Tri::One => bit,
            Tri::Any => true,
        }
    }

    pub fn from_char(c: char) -> Option<Tri> {
        match c {
            '0' => Some(Tri::Zero),
            '1' => Some(Tri::One),
            '*' => Some(Tri::Any),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Tri::Zero => '0',
            Tri::One => '1',
            Tri::Any => '*',
        }
    }

    fn exact(bit: bool) -> Tri {
        if bit {
            Tri::One
        } else {
            Tri::Zero
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ColorConstraint {
    pub name: String,
    /// `+Name` when true, `-Name` when false.
    pub present: bool,
}

/// Constraint on one side of a type pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pattern {
    pub eq: Vec<Tri>,
    pub adj: Vec<Tri>,
    pub colors: Vec<ColorConstraint>,
}

impl Pattern {
    pub fn any(k: usize) -> Self {
        Pattern {
            eq: vec![Tri::Any; k],
            adj: vec![Tri::Any; k],
            colors: Vec::new(),
        }
    }

    /// Pattern matching exactly `t`; every color of `palette` not held by `t` is excluded.
    pub fn exact(t: &AtomicType, palette: &[String]) -> Self {
        let k = t.k();
        Pattern {
            eq: (0..k).map(|i| Tri::exact(t.eq.contains(i))).collect(),
            adj: (0..k).map(|i| Tri::exact(t.adj.contains(i))).collect(),
            colors: palette
                .iter()
                .map(|c| ColorConstraint {
                    name: c.clone(),
                    present: t.colors.contains(c),
                })
                .collect(),
        }
    }

    pub fn matches(&self, t: &AtomicType) -> bool {
        self.eq.iter().enumerate().all(|(i, m)| m.matches(t.eq.contains(i)))
            && self.adj.iter().enumerate().all(|(i, m)| m.matches(t.adj.contains(i)))
            && self
                .colors
                .iter()
                .all(|c| t.colors.contains(&c.name) == c.present)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eq: String = self.eq.iter().map(|t| t.to_char()).collect();
        let adj: String = self.adj.iter().map(|t| t.to_char()).collect();
        write!(f, "(eq={eq}, adj={adj}")?;
        if !self.colors.is_empty() {
            let list: Vec<String> = self
                .colors
                .iter()
                .map(|c| format!("{}{}", if c.present { '+' } else { '-' }, c.name))
                .collect();
            write!(f, ", color={}", list.join(","))?;
        }
        write!(f, ")")
    }
}

/// A flip relation given by pattern pairs over atomic types with `k` parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FlipSpec {
    pub name: String,
    pub k: usize,
    pub symmetric: bool,
    pub pairs: Vec<(Pattern, Pattern)>,
}

impl FlipSpec {
    pub fn new(
        name: impl Into<String>,
        k: usize,
        symmetric: bool,
        pairs: Vec<(Pattern, Pattern)>,
    ) -> Result<Self> {
        let name = name.into();
        for p in pairs.iter().flat_map(|(a, b)| [a, b]) {
            if p.eq.len() != k || p.adj.len() != k {
                return Err(Error::BadParameter(format!(
                    "flip `{name}` has k={k} but a pattern of length {}",
                    p.eq.len().max(p.adj.len())
                )));
            }
        }
        Ok(FlipSpec {
            name,
            k,
            symmetric,
            pairs,
        })
    }

    /// The flip with no pairs: `G ⊕ ∅ = G`.
    pub fn identity(k: usize) -> Self {
        FlipSpec {
            name: "Id".into(),
            k,
            symmetric: true,
            pairs: Vec::new(),
        }
    }

    /// Flips every pair of vertices, complementing the graph.
    pub fn complement_all(k: usize) -> Self {
        FlipSpec {
            name: "Comp".into(),
            k,
            symmetric: true,
            pairs: vec![(Pattern::any(k), Pattern::any(k))],
        }
    }

    /// Whether the ordered type pair `(tu, tv)` lies in the relation.
    pub fn matches(&self, tu: &AtomicType, tv: &AtomicType) -> bool {
        self.pairs.iter().any(|(p, q)| {
            (p.matches(tu) && q.matches(tv)) || (self.symmetric && p.matches(tv) && q.matches(tu))
        })
    }
}

impl fmt::Display for FlipSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "flip {} k={}", self.name, self.k)?;
        if self.symmetric {
            write!(f, " symmetric")?;
        }
        write!(f, " {{")?;
        for (p, q) in &self.pairs {
            write!(f, " {p} ~ {q};")?;
        }
        write!(f, " }}")
    }
}

/// `rel[K][L]`: whether the flip relates realized classes `K` and `L`.
fn class_relation(spec: &FlipSpec, classes: &TypeClasses) -> Vec<Vec<bool>> {
    classes
        .types
        .iter()
        .map(|tk| classes.types.iter().map(|tl| spec.matches(tk, tl)).collect())
        .collect()
}

fn flip_with(g: &ColoredGraph, classes: &TypeClasses, rel: &[Vec<bool>]) -> Digraph {
    let n = g.n();
    // per class, the union of the classes it is related to
    let targets: Vec<VertexSet> = rel
        .iter()
        .map(|row| {
            let mut s = VertexSet::empty(n);
            for (l, &on) in row.iter().enumerate() {
                if on {
                    s.union_with(&classes.members[l]);
                }
            }
            s
        })
        .collect();
    let out: Vec<VertexSet> = (0..n)
        .map(|u| {
            let mut s = g.neighbors(u).clone();
            s.symmetric_difference_with(&targets[classes.class_of[u]]);
            s.remove(u);
            s
        })
        .collect();
    Digraph::from_fn(n, |u, v| out[u].contains(v))
}

/// `G ⊕_ā A`: arc `u → v` iff `E(u, v)` xor the type pair of `(u, v)` is in `A`.
pub fn apply_flip(g: &ColoredGraph, spec: &FlipSpec, params: &[usize]) -> Result<Digraph> {
    if params.len() != spec.k {
        return Err(Error::ArityMismatch {
            expected: spec.k,
            got: params.len(),
        });
    }
    check_params(g, params)?;
    let classes = TypeClasses::of(g, params);
    let rel = class_relation(spec, &classes);
    Ok(flip_with(g, &classes, &rel))
}

/// Applies `spec` as a symmetric flip and returns an undirected graph with
/// the colors of `g`. A spec without the symmetric flag is accepted when the
/// relation it realizes on `g` happens to be swap-closed.
pub fn apply_symmetric_flip(
    g: &ColoredGraph,
    spec: &FlipSpec,
    params: &[usize],
) -> Result<ColoredGraph> {
    if params.len() != spec.k {
        return Err(Error::ArityMismatch {
            expected: spec.k,
            got: params.len(),
        });
    }
    check_params(g, params)?;
    let classes = TypeClasses::of(g, params);
    let rel = class_relation(spec, &classes);
    if !spec.symmetric {
        let c = classes.len();
        for a in 0..c {
            for b in a + 1..c {
                if rel[a][b] != rel[b][a] {
                    return Err(Error::AsymmetricSpecUsedAsSymmetric(spec.name.clone()));
                }
            }
        }
    }
    let d = flip_with(g, &classes, &rel);
    let mut out = d.to_undirected().expect("swap-closed relation gives a symmetric flip");
    for (name, members) in g.colors() {
        out.set_color(name.clone(), members.clone())?;
    }
    Ok(out)
}

/// Isolates the vertices of `s`: removes the edges incident to them and, for
/// the `i`-th member in ascending order, adds colors `Nbr_i = N(s)` and `Pt_i = {s}`.
pub fn s_operation_separator(g: &ColoredGraph, s: &VertexSet) -> ColoredGraph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| !s.contains(u) && !s.contains(v))
        .collect();
    let mut out = ColoredGraph::from_edges(n, &edges).expect("subgraph of a valid graph");
    for (name, members) in g.colors() {
        out.set_color(name.clone(), members.clone())
            .expect("color of a valid graph");
    }
    for (i, v) in s.iter().enumerate() {
        out.set_color(format!("Nbr_{i}"), g.neighbors(v).clone())
            .expect("neighbourhood fits the graph");
        out.set_color(format!("Pt_{i}"), VertexSet::singleton(n, v))
            .expect("vertex fits the graph");
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum SOperationResult {
    Graph(ColoredGraph),
    /// A genuinely directed flip, with its colors kept alongside.
    Digraph {
        digraph: Digraph,
        colors: BTreeMap<String, VertexSet>,
    },
}

/// Flips `g` with parameters `s` (ascending) and marks each realized atomic
/// type with a color `T0, T1, …` in order of first appearance.
pub fn s_operation_flip(
    g: &ColoredGraph,
    s: &VertexSet,
    spec: Option<&FlipSpec>,
) -> Result<SOperationResult> {
    let params = s.to_vec();
    let identity;
    let spec = match spec {
        Some(spec) => spec,
        None => {
            identity = FlipSpec::identity(params.len());
            &identity
        }
    };
    if params.len() != spec.k {
        return Err(Error::ArityMismatch {
            expected: spec.k,
            got: params.len(),
        });
    }
    let classes = TypeClasses::of(g, &params);
    let mut colors: BTreeMap<String, VertexSet> = g.colors().clone();
    for (i, members) in classes.members.iter().enumerate() {
        colors.insert(format!("T{i}"), members.clone());
    }
    let d = apply_flip(g, spec, &params)?;
    match d.to_undirected() {
        Some(mut out) => {
            for (name, members) in colors {
                out.set_color(name, members)?;
            }
            Ok(SOperationResult::Graph(out))
        }
        None => Ok(SOperationResult::Digraph {
            digraph: d,
            colors,
        }),
    }
}
