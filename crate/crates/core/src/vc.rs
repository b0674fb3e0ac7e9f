//! VC dimension of neighbourhood set systems and dualities of bipartite relations.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::vset::VertexSet;

pub const DEFAULT_VC_MAX_N: usize = 16;
pub const DEFAULT_DUALITY_CAP: u64 = 10_000_000;

fn is_shattered(neighborhoods: &[VertexSet], candidate: &VertexSet) -> bool {
    let traces: HashSet<VertexSet> = neighborhoods
        .iter()
        .map(|nb| nb.intersection(candidate))
        .collect();
    traces.len() == 1usize << candidate.len()
}

/// Largest size of a vertex set shattered by `{N(v)}`.
///
/// Shattered sets are grown level by level: subsets of shattered sets are
/// shattered, so level `d + 1` only extends level `d` by larger indices.
pub fn vc_dimension(g: &ColoredGraph, max_n: usize) -> Result<usize> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooLarge(format!(
            "vc dimension search is capped at {max_n} vertices, graph has {n}"
        )));
    }
    let neighborhoods: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut level: Vec<VertexSet> = vec![VertexSet::empty(n)];
    let mut best = 0;
    if n == 0 {
        return Ok(0);
    }
    loop {
        let mut next = Vec::new();
        for s in &level {
            let start = s.iter().last().map_or(0, |m| m + 1);
            for v in start..n {
                let mut c = s.clone();
                c.insert(v);
                // 2^|c| distinct traces need at least that many vertices
                if (1usize << c.len()) > n {
                    continue;
                }
                if is_shattered(&neighborhoods, &c) {
                    next.push(c);
                }
            }
        }
        if next.is_empty() {
            return Ok(best);
        }
        best += 1;
        level = next;
    }
}

/// Bipartite relation `E ⊆ A × B` with `A = 0..rows.len()` and `B = 0..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteRelation {
    rows: Vec<VertexSet>,
    b: usize,
}

impl BipartiteRelation {
    pub fn new(a: usize, b: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![VertexSet::empty(b); a];
        for &(x, y) in pairs {
            if x >= a || y >= b {
                return Err(Error::BadParameter(format!(
                    "pair ({x}, {y}) outside {a} x {b}"
                )));
            }
            rows[x].insert(y);
        }
        Ok(BipartiteRelation { rows, b })
    }

    pub fn from_fn(a: usize, b: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        let rows = (0..a)
            .map(|x| VertexSet::from_indices(b, (0..b).filter(|&y| rel(x, y))))
            .collect();
        BipartiteRelation { rows, b }
    }

    /// Edge relation of a graph between two vertex sets, reindexed.
    pub fn of_graph(g: &ColoredGraph, a: &[usize], b: &[usize]) -> Self {
        Self::from_fn(a.len(), b.len(), |x, y| g.has_edge(a[x], b[y]))
    }

    pub fn a_len(&self) -> usize {
        self.rows.len()
    }

    pub fn b_len(&self) -> usize {
        self.b
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "side", content = "witness", rename_all = "snake_case")]
pub enum DualityWitness {
    /// `A0` with: for every `b` some `a ∈ A0` has `¬E(a, b)`.
    A(Vec<usize>),
    /// `B0` with: for every `a` some `b ∈ B0` has `E(a, b)`.
    B(Vec<usize>),
}

fn binomial_prefix_sum(n: usize, k: usize) -> u64 {
    let mut total: u64 = 0;
    let mut c: u64 = 1;
    for i in 0..=k.min(n) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    total
}

/// Advances `idx` to the next `idx.len()`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let size = idx.len();
    for i in (0..size).rev() {
        if idx[i] < n - size + i {
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Visits every subset of `0..n` of size at most `k`, in order of size and
/// then lexicographically, until `f` returns true.
fn find_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    for size in 0..=k.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if f(&idx) {
                return Some(idx);
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    None
}

/// Searches for a duality of order `k`, trying the `A` side first.
pub fn check_duality(rel: &BipartiteRelation, k: usize) -> Result<Option<DualityWitness>> {
    check_duality_capped(rel, k, DEFAULT_DUALITY_CAP)
}

pub fn check_duality_capped(
    rel: &BipartiteRelation,
    k: usize,
    cap: u64,
) -> Result<Option<DualityWitness>> {
    let (a, b) = (rel.a_len(), rel.b_len());
    let work = binomial_prefix_sum(a, k).saturating_add(binomial_prefix_sum(b, k));
    if work > cap {
        return Err(Error::TooLarge(format!(
            "duality search would visit {work} candidate sets (cap {cap})"
        )));
    }
    let a_side = find_subset(a, k, |a0| {
        (0..b).all(|y| a0.iter().any(|&x| !rel.related(x, y)))
    });
    if let Some(w) = a_side {
        return Ok(Some(DualityWitness::A(w)));
    }
    let b_side = find_subset(b, k, |b0| {
        (0..a).all(|x| b0.iter().any(|&y| rel.related(x, y)))
    });
    Ok(b_side.map(DualityWitness::B))
}
