use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::vset::VertexSet;

/// A pair `(L, R)` covering the vertex set with no edge between `L\R` and `R\L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub l: VertexSet,
    pub r: VertexSet,
}

impl Separation {
    pub fn order(&self) -> usize {
        self.l.intersection(&self.r).len()
    }

    /// First edge joining `L\R` to `R\L`, if any.
    pub fn violating_edge(&self, g: &ColoredGraph) -> Option<(usize, usize)> {
        let left = self.l.difference(&self.r);
        let right = self.r.difference(&self.l);
        let edge = left
            .iter()
            .find_map(|u| g.neighbors(u).intersection(&right).first().map(|v| (u, v)));
        edge
    }

    pub fn is_separation(&self, g: &ColoredGraph) -> bool {
        self.l.union(&self.r).is_full() && self.violating_edge(g).is_none()
    }

    /// `L\R ⊆ X ⊆ L`.
    pub fn captures(&self, x: &VertexSet) -> bool {
        self.l.difference(&self.r).is_subset(x) && x.is_subset(&self.l)
    }
}

/// Separation capturing `x` built from the frequent rows and columns of its cut matrix.
///
/// A row (column) is frequent when it occurs at least `t` times. `L` is `x`
/// plus the complement vertices with non-frequent columns; `R` is the
/// complement plus the vertices of `x` with non-frequent rows. On graphs
/// without a `K_{t,t}` subgraph the order is at most `2^(r+1)(t-1)` for
/// `r = cutrank(x)`; otherwise an edge between frequent classes may break the
/// separation, reported as [`Error::NotASeparation`].
pub fn capture_separation(g: &ColoredGraph, x: &VertexSet, t: usize) -> Result<Separation> {
    if t == 0 {
        return Err(Error::BadParameter("frequency threshold t must be >= 1".into()));
    }
    let n = g.n();
    if x.is_empty() {
        return Ok(Separation {
            l: VertexSet::empty(n),
            r: VertexSet::full(n),
        });
    }
    if x.is_full() {
        return Ok(Separation {
            l: VertexSet::full(n),
            r: VertexSet::empty(n),
        });
    }
    let outside = x.complement();
    let non_frequent = |side: &VertexSet, other: &VertexSet| -> VertexSet {
        let mut counts: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for v in side.iter() {
            counts
                .entry(g.neighbors(v).intersection(other))
                .or_default()
                .push(v);
        }
        let mut out = VertexSet::empty(n);
        for members in counts.values().filter(|m| m.len() < t) {
            for &v in members {
                out.insert(v);
            }
        }
        out
    };
    let rare_rows = non_frequent(x, &outside);
    let rare_cols = non_frequent(&outside, x);
    let sep = Separation {
        l: x.union(&rare_cols),
        r: outside.union(&rare_rows),
    };
    if let Some((u, v)) = sep.violating_edge(g) {
        return Err(Error::NotASeparation { u, v });
    }
    debug_assert!(sep.captures(x));
    Ok(sep)
}

/// Whether `g` contains `K_{t,t}` as a (not necessarily induced) subgraph, by brute force.
pub fn contains_biclique(g: &ColoredGraph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let n = g.n();
    let mut chosen = Vec::with_capacity(t);
    fn pick(
        g: &ColoredGraph,
        t: usize,
        start: usize,
        common: &VertexSet,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == t {
            // the common neighbourhood must contain t vertices outside the chosen side
            let mut rest = common.clone();
            for &c in chosen.iter() {
                rest.remove(c);
            }
            return rest.len() >= t;
        }
        for v in start..g.n() {
            let next = common.intersection(g.neighbors(v));
            if next.len() < t {
                continue;
            }
            chosen.push(v);
            if pick(g, t, v + 1, &next, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    pick(g, t, 0, &VertexSet::full(n), &mut chosen)
}
