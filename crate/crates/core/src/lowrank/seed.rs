//! Seeds `(X₊, X₋, 𝒳)` and their spans.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flip::{apply_flip, FlipSpec, TypeClasses};
use crate::graph::{ColoredGraph, Digraph};
use crate::scc::{condense, SccCondensation};
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Seed {
    pub x_plus: VertexSet,
    pub x_minus: VertexSet,
    pub parts: Vec<VertexSet>,
}

impl Seed {
    /// `(∅, V, ∅)`, whose span is `{∅}`.
    pub fn trivial(n: usize) -> Self {
        Seed {
            x_plus: VertexSet::empty(n),
            x_minus: VertexSet::full(n),
            parts: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.x_plus.capacity()
    }
}

/// The seed generated by `b` in `h`.
///
/// `X₊` holds the vertices strictly above some `bᵢ` in the reachability
/// order, `X₋` those strictly below some `bᵢ`, and the remaining vertices
/// are split into strongly connected components. When some `bᵢ` falls into
/// `X₊ ∪ X₋`, or two remaining components are comparable, `b` is
/// inconsistent and the trivial seed is returned.
pub fn seed_from_digraph(h: &Digraph, b: &[usize]) -> Result<Seed> {
    let n = h.n();
    if let Some(&vertex) = b.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex, n });
    }
    Ok(seed_from_condensation(&condense(h), b))
}

fn seed_from_condensation(cond: &SccCondensation, b: &[usize]) -> Seed {
    let n = cond.comp_of.len();
    let k = cond.comp_count();
    let b_comps = VertexSet::from_indices(k, b.iter().map(|&v| cond.comp_of[v]));
    let mut above = VertexSet::empty(k);
    let mut below = VertexSet::empty(k);
    for c in 0..k {
        for d in b_comps.iter() {
            if c != d && cond.reach[d].contains(c) {
                above.insert(c);
            }
            if c != d && cond.reach[c].contains(d) {
                below.insert(c);
            }
        }
    }
    let rest = above.union(&below).complement();
    let consistent = b_comps.is_subset(&rest)
        && rest.iter().all(|c| {
            let mut r = cond.reach[c].intersection(&rest);
            r.remove(c);
            r.is_empty()
        });
    if !consistent {
        return Seed::trivial(n);
    }
    let mut parts: Vec<VertexSet> = rest.iter().map(|c| cond.members[c].clone()).collect();
    parts.sort();
    Seed {
        x_plus: cond.expand(&above),
        x_minus: cond.expand(&below),
        parts,
    }
}

/// The seed generated by `b` in `G ⊕_a A`.
pub fn seed_from_params(g: &ColoredGraph, spec: &FlipSpec, a: &[usize], b: &[usize]) -> Result<Seed> {
    seed_from_digraph(&apply_flip(g, spec, a)?, b)
}

/// `{X₊ ∪ ⋃𝒴 : 𝒴 ⊆ 𝒳}`, sorted.
pub fn span(seed: &Seed, cap: usize) -> Result<Vec<VertexSet>> {
    let m = seed.parts.len();
    if m >= usize::BITS as usize - 1 || (1usize << m) > cap {
        return Err(Error::CapExceeded { cap });
    }
    let mut out: Vec<VertexSet> = (0..1usize << m)
        .map(|mask| {
            let mut x = seed.x_plus.clone();
            for (i, part) in seed.parts.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    x.union_with(part);
                }
            }
            x
        })
        .collect();
    out.sort();
    Ok(out)
}

pub fn span_contains(seed: &Seed, x: &VertexSet) -> bool {
    seed.x_plus.is_subset(x)
        && seed.x_minus.is_disjoint(x)
        && seed
            .parts
            .iter()
            .all(|p| p.is_subset(x) || p.is_disjoint(x))
}

/// `X₊`, `X₋` and the parts are pairwise disjoint, the parts nonempty, and together they cover `V`.
pub fn is_partition(seed: &Seed) -> bool {
    let mut seen = seed.x_plus.clone();
    if seen.intersects(&seed.x_minus) {
        return false;
    }
    seen.union_with(&seed.x_minus);
    for p in &seed.parts {
        if p.is_empty() || seen.intersects(p) {
            return false;
        }
        seen.union_with(p);
    }
    seen.is_full()
}

/// Members of the parts with equal atomic type over `params` have equal
/// neighbourhoods outside their two parts.
pub fn is_uniform(g: &ColoredGraph, seed: &Seed, params: &[usize]) -> bool {
    let classes = TypeClasses::of(g, params);
    let mut part_of = vec![usize::MAX; g.n()];
    for (i, p) in seed.parts.iter().enumerate() {
        for v in p.iter() {
            part_of[v] = i;
        }
    }
    let inside: Vec<usize> = (0..g.n()).filter(|&v| part_of[v] != usize::MAX).collect();
    for (i, &u1) in inside.iter().enumerate() {
        for &u2 in &inside[i + 1..] {
            if classes.class_of[u1] != classes.class_of[u2] {
                continue;
            }
            let outside = seed.parts[part_of[u1]]
                .union(&seed.parts[part_of[u2]])
                .complement();
            if g.neighbors(u1).intersection(&outside) != g.neighbors(u2).intersection(&outside) {
                return false;
            }
        }
    }
    true
}

/// Parameters `b` generating a seed whose span contains a given suffix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuffixSeed {
    pub b: Vec<usize>,
    #[serde(flatten)]
    pub seed: Seed,
    /// Every vertex of `X₊` lies strictly above one of these.
    pub b_plus: Vec<usize>,
    /// Every vertex of `X₋` lies strictly below one of these.
    pub b_minus: Vec<usize>,
    /// Number of atomic types over the flip parameters realized in `G`.
    pub type_count: usize,
    /// `|B₊|` and `|B₋|` are both at most `type_count²`.
    pub within_bound: bool,
}

/// Finds `b` with `x ∈ Span(seed_from_digraph(h, b))` for a suffix `x` of `h`.
///
/// Starts from the seed `(x, V∖x, ∅)` and repeatedly moves a minimal
/// component of `X₊` not lying above any part into the parts (and
/// symmetrically a maximal component of `X₋` not below any part). At the
/// fixpoint the parts form an antichain, every vertex of `X₊` is above a
/// part and every vertex of `X₋` below one; `b` takes one vertex from each
/// part of an inclusion-minimal cover on either side.
pub fn seed_for_suffix(
    h: &Digraph,
    g: &ColoredGraph,
    params: &[usize],
    x: &VertexSet,
) -> Result<SuffixSeed> {
    let n = h.n();
    if x.capacity() != n || g.n() != n {
        return Err(Error::BadParameter(
            "graph, digraph and set disagree on the vertex count".into(),
        ));
    }
    if !h.is_suffix(x) {
        return Err(Error::NotASuffix);
    }
    let cond = condense(h);
    let k = cond.comp_count();
    let strictly_above: Vec<VertexSet> = (0..k)
        .map(|c| {
            let mut r = cond.reach[c].clone();
            r.remove(c);
            r
        })
        .collect();
    let strictly_below: Vec<VertexSet> = (0..k).map(|c| cond.strictly_below(c)).collect();

    let mut plus = VertexSet::from_indices(k, x.iter().map(|v| cond.comp_of[v]));
    let mut minus = plus.complement();
    let mut parts = VertexSet::empty(k);
    loop {
        let p: Vec<usize> = plus
            .iter()
            .filter(|&c| strictly_below[c].is_disjoint(&parts))
            .collect();
        let p_set = VertexSet::from_indices(k, p.iter().copied());
        let minimal = p.iter().copied().find(|&c| strictly_below[c].is_disjoint(&p_set));
        let q: Vec<usize> = minus
            .iter()
            .filter(|&c| strictly_above[c].is_disjoint(&parts))
            .collect();
        let q_set = VertexSet::from_indices(k, q.iter().copied());
        let maximal = q.iter().copied().find(|&c| strictly_above[c].is_disjoint(&q_set));
        if minimal.is_none() && maximal.is_none() {
            break;
        }
        if let Some(c) = minimal {
            plus.remove(c);
            parts.insert(c);
        } else if let Some(c) = maximal {
            minus.remove(c);
            parts.insert(c);
        }
    }

    let cover = |side: &VertexSet, dominators: &[VertexSet]| -> Vec<usize> {
        let mut chosen: VertexSet = parts.clone();
        chosen.intersect_with(&side.iter().fold(VertexSet::empty(k), |mut acc, c| {
            acc.union_with(&dominators[c]);
            acc
        }));
        for d in chosen.clone().iter() {
            chosen.remove(d);
            if !side.iter().all(|c| dominators[c].intersects(&chosen)) {
                chosen.insert(d);
            }
        }
        chosen.iter().map(|d| cond.members[d].first().expect("nonempty component")).collect()
    };
    let b_plus = cover(&plus, &strictly_below);
    let b_minus = cover(&minus, &strictly_above);

    let mut b: Vec<usize> = b_plus.iter().chain(&b_minus).copied().collect();
    b.sort_unstable();
    b.dedup();
    if b.is_empty() {
        if let Some(c) = parts.first() {
            b.push(cond.members[c].first().expect("nonempty component"));
        }
    }
    let seed = seed_from_condensation(&cond, &b);
    debug_assert!(span_contains(&seed, x));

    let type_count = TypeClasses::of(g, params).len();
    let bound = type_count * type_count;
    Ok(SuffixSeed {
        within_bound: b_plus.len() <= bound && b_minus.len() <= bound,
        b,
        seed,
        b_plus,
        b_minus,
        type_count,
    })
}
