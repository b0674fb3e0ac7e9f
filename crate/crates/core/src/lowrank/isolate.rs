use serde::Serialize;

use crate::error::{Error, Result};
use crate::flip::{apply_symmetric_flip, FlipSpec, Pattern, TypeClasses};
use crate::graph::ColoredGraph;
use crate::vc::next_combination;
use crate::vset::VertexSet;

/// Upper bound on the number of parameter sets tried.
pub const DEFAULT_ISOLATION_BUDGET: u64 = 2_000_000;

/// Parameters and a symmetric flip after which `X` is a union of components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatingFlip {
    pub params: Vec<usize>,
    pub spec: FlipSpec,
}

fn count_subsets(n: usize, l_max: usize) -> u64 {
    let mut total: u64 = 0;
    let mut c: u64 = 1;
    for i in 0..=l_max.min(n) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    total
}

/// Searches parameter sets `S` with `|S| ≤ l_max` (by size, then
/// lexicographically) for a symmetric flip over `S` removing every edge
/// between `x` and its complement.
///
/// For a fixed `S` such a flip exists iff, for all type classes `K, L`, the
/// pairs of `(K∩X)×(L∖X) ∪ (L∩X)×(K∖X)` are either all edges or all non-edges.
pub fn find_isolating_flip(
    g: &ColoredGraph,
    x: &VertexSet,
    l_max: usize,
) -> Result<Option<IsolatingFlip>> {
    let n = g.n();
    let work = count_subsets(n, l_max);
    if work > DEFAULT_ISOLATION_BUDGET {
        return Err(Error::TooLarge(format!(
            "isolation search would try {work} parameter sets (budget {DEFAULT_ISOLATION_BUDGET})"
        )));
    }
    let outside = x.complement();
    let palette: Vec<String> = g.colors().keys().cloned().collect();
    for size in 0..=l_max.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if let Some(spec) = isolating_spec(g, x, &outside, &idx, &palette) {
                let flipped = apply_symmetric_flip(g, &spec, &idx)?;
                debug_assert!(x.iter().all(|u| flipped.neighbors(u).is_subset(x)));
                return Ok(Some(IsolatingFlip { params: idx, spec }));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    Ok(None)
}

fn isolating_spec(
    g: &ColoredGraph,
    x: &VertexSet,
    outside: &VertexSet,
    params: &[usize],
    palette: &[String],
) -> Option<FlipSpec> {
    let classes = TypeClasses::of(g, params);
    let c = classes.len();
    let mut pairs = Vec::new();
    for k in 0..c {
        for l in k..c {
            let mut seen: Option<bool> = None;
            let sides = [(k, l), (l, k)];
            for &(a, b) in &sides {
                let inner = classes.members[a].intersection(x);
                let outer = classes.members[b].intersection(outside);
                for u in inner.iter() {
                    let row = g.neighbors(u).intersection(&outer);
                    let value = if row.is_empty() {
                        false
                    } else if row == outer {
                        true
                    } else {
                        return None;
                    };
                    if outer.is_empty() {
                        continue;
                    }
                    match seen {
                        Some(s) if s != value => return None,
                        _ => seen = Some(value),
                    }
                }
            }
            if seen == Some(true) {
                pairs.push((
                    Pattern::exact(&classes.types[k], palette),
                    Pattern::exact(&classes.types[l], palette),
                ));
            }
        }
    }
    Some(
        FlipSpec::new("Iso", params.len(), true, pairs)
            .expect("exact patterns have the parameter count as length"),
    )
}
