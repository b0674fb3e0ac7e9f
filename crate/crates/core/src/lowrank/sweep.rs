use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::hflip::build_h_digraph;
use crate::vc::next_combination;
use crate::vset::VertexSet;

use super::suffixes::suffixes;
use super::{Provenance, SuffixFamily};

/// Upper bound on the number of parameter pairs a sweep may visit.
pub const DEFAULT_SWEEP_BUDGET: u64 = 20_000_000;

fn half_size(n: usize, r: usize) -> usize {
    if r >= 32 {
        n
    } else {
        n.min(1usize << r)
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut c: u64 = 1;
    for i in 0..k {
        c = c.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    c
}

fn pair_count(n: usize, max: usize) -> u64 {
    let mut total: u64 = 0;
    for i in 1..=max {
        for j in 1..=max.min(n - i) {
            total = total.saturating_add(binomial(n, i).saturating_mul(binomial(n - i, j)));
        }
    }
    total
}

fn subsets_up_to(n: usize, max: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for size in 1..=max.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(VertexSet::from_indices(n, idx.iter().copied()));
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    out
}

/// Ordered pairs of disjoint nonempty vertex sets with at most `2^r` members each.
///
/// `H_ā` depends only on the sets underlying the two halves, so these pairs
/// cover every parameter tuple of length `2·2^r`.
pub fn param_pairs(n: usize, r: usize) -> Vec<(VertexSet, VertexSet)> {
    let halves = subsets_up_to(n, half_size(n, r));
    let mut out = Vec::new();
    for p in &halves {
        for m in &halves {
            if p.is_disjoint(m) {
                out.push((p.clone(), m.clone()));
            }
        }
    }
    out
}

/// One parameter pair of a sweep and the suffixes of its digraph.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub a_plus: VertexSet,
    pub a_minus: VertexSet,
    pub admissible: bool,
    pub suffixes: Vec<VertexSet>,
}

fn check_budget(n: usize, r: usize) -> Result<()> {
    let pairs = pair_count(n, half_size(n, r));
    if pairs > DEFAULT_SWEEP_BUDGET {
        return Err(Error::TooLarge(format!(
            "sweep would visit {pairs} parameter pairs (budget {DEFAULT_SWEEP_BUDGET})"
        )));
    }
    Ok(())
}

/// Builds `H_ā` for every parameter pair and enumerates its suffixes, in
/// the order of [`param_pairs`]. Runs on the current rayon pool.
pub fn lowrank_sweep(g: &ColoredGraph, r: usize, cap: usize) -> Result<Vec<SweepEntry>> {
    check_budget(g.n(), r)?;
    param_pairs(g.n(), r)
        .into_par_iter()
        .map(|(a_plus, a_minus)| {
            let h = build_h_digraph(g, &a_plus, &a_minus, r);
            Ok(SweepEntry {
                suffixes: suffixes(&h.digraph, cap)?,
                admissible: h.admissible,
                a_plus,
                a_minus,
            })
        })
        .collect()
}

/// Union of the suffixes of `H_ā` over all parameter pairs, plus `∅` and `V`.
///
/// Each set is attributed to the first pair producing it, so the output is
/// independent of the number of threads.
pub fn lowrank_via_suffixes(g: &ColoredGraph, r: usize, cap: usize) -> Result<SuffixFamily> {
    let n = g.n();
    check_budget(n, r)?;
    let pairs = param_pairs(n, r);
    let per_pair: Vec<Vec<VertexSet>> = pairs
        .par_iter()
        .map(|(a_plus, a_minus)| suffixes(&build_h_digraph(g, a_plus, a_minus, r).digraph, cap))
        .collect::<Result<_>>()?;
    let mut merged: BTreeMap<VertexSet, Provenance> = BTreeMap::new();
    for x in [VertexSet::empty(n), VertexSet::full(n)] {
        merged.insert(x, Provenance::Trivial);
    }
    for ((a_plus, a_minus), sets) in pairs.iter().zip(per_pair) {
        for x in sets {
            if let Entry::Vacant(e) = merged.entry(x) {
                e.insert(Provenance::Params {
                    a_plus: a_plus.to_vec(),
                    a_minus: a_minus.to_vec(),
                });
                if merged.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
            }
        }
    }
    let (sets, provenance) = merged.into_iter().unzip();
    Ok(SuffixFamily { sets, provenance })
}
