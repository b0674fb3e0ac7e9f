use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::vset::VertexSet;

/// Undirected simple graph with named color predicates.
///
/// Adjacency is symmetric and irreflexive. A vertex may carry any number of colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    adj: Vec<VertexSet>,
    colors: BTreeMap<String, VertexSet>,
}

impl ColoredGraph {
    pub fn empty(n: usize) -> Self {
        ColoredGraph {
            adj: vec![VertexSet::empty(n); n],
            colors: BTreeMap::new(),
        }
    }

    /// Builds a graph from an edge list; duplicates and reversed pairs are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Adds (or replaces) a color predicate.
    pub fn with_color(mut self, name: impl Into<String>, members: VertexSet) -> Result<Self> {
        self.set_color(name, members)?;
        Ok(self)
    }

    pub(crate) fn set_color(&mut self, name: impl Into<String>, members: VertexSet) -> Result<()> {
        if members.capacity() != self.n() {
            return Err(Error::BadParameter(format!(
                "color set has capacity {}, graph has {} vertices",
                members.capacity(),
                self.n()
            )));
        }
        self.colors.insert(name.into(), members);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn color(&self, name: &str) -> Option<&VertexSet> {
        self.colors.get(name)
    }

    pub fn colors(&self) -> &BTreeMap<String, VertexSet> {
        &self.colors
    }

    /// Names of the colors containing `v`, sorted.
    pub fn colors_of(&self, v: usize) -> Vec<String> {
        self.colors
            .iter()
            .filter(|(_, s)| s.contains(v))
            .map(|(name, _)| name.clone())
            .collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edge complement; colors are kept.
    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut s = self.adj[u].complement();
                s.remove(u);
                s
            })
            .collect();
        ColoredGraph {
            adj,
            colors: self.colors.clone(),
        }
    }

    /// Vertices reachable from `s` by paths avoiding `blocked` (`s` itself must not be blocked).
    pub fn component_avoiding(&self, s: usize, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n(), s);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if !seen.contains(w) && !blocked.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let none = VertexSet::empty(n);
        let mut covered = VertexSet::empty(n);
        let mut out = Vec::new();
        for v in 0..n {
            if !covered.contains(v) {
                let c = self.component_avoiding(v, &none);
                covered.union_with(&c);
                out.push(c);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Checks symmetry, irreflexivity and color capacities.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| {
            self.adj[u].capacity() == n
                && !self.adj[u].contains(u)
                && self.adj[u].iter().all(|v| self.adj[v].contains(u))
        }) && self.colors.values().all(|s| s.capacity() == n)
    }
}

/// Directed graph without self-loops; antiparallel arcs are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out_adj: Vec<VertexSet>,
    in_adj: Vec<VertexSet>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            out_adj: vec![VertexSet::empty(n); n],
            in_adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Self::empty(n);
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            d.out_adj[u].insert(v);
            d.in_adj[v].insert(u);
        }
        Ok(d)
    }

    /// Builds the digraph whose arcs are the ordered pairs `u != v` accepted by `arc`.
    pub fn from_fn(n: usize, mut arc: impl FnMut(usize, usize) -> bool) -> Self {
        let mut d = Self::empty(n);
        for u in 0..n {
            for v in 0..n {
                if u != v && arc(u, v) {
                    d.out_adj[u].insert(v);
                    d.in_adj[v].insert(u);
                }
            }
        }
        d
    }

    /// The symmetric digraph with both orientations of every edge.
    pub fn from_undirected(g: &ColoredGraph) -> Self {
        Digraph {
            out_adj: (0..g.n()).map(|v| g.neighbors(v).clone()).collect(),
            in_adj: (0..g.n()).map(|v| g.neighbors(v).clone()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.out_adj.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_adj[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.in_adj[v]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, out)| out.iter().map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(VertexSet::len).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.out_adj == self.in_adj
    }

    /// Reflexive forward reachability set of `s`.
    pub fn reachable_from(&self, s: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n(), s);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in self.out_adj[u].iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// `S` is a suffix iff no arc leaves it.
    pub fn is_suffix(&self, set: &VertexSet) -> bool {
        set.iter().all(|u| self.out_adj[u].is_subset(set))
    }

    /// Underlying undirected graph when the arc relation is symmetric.
    pub fn to_undirected(&self) -> Option<ColoredGraph> {
        if !self.is_symmetric() {
            return None;
        }
        let mut g = ColoredGraph::empty(self.n());
        g.adj.clone_from(&self.out_adj);
        Some(g)
    }

    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        (0..n).all(|u| {
            !self.out_adj[u].contains(u)
                && self.out_adj[u].iter().all(|v| self.in_adj[v].contains(u))
                && self.in_adj[u].iter().all(|v| self.out_adj[v].contains(u))
        })
    }
}
