//! Enumeration and certification of vertex sets of bounded cutrank.

mod brute;
mod isolate;
mod seed;
mod suffixes;
mod sweep;

use serde::Serialize;

use crate::vset::VertexSet;

pub use brute::{brute_lowrank, DEFAULT_BRUTE_MAX_N};
pub use isolate::{find_isolating_flip, IsolatingFlip, DEFAULT_ISOLATION_BUDGET};
pub use seed::{
    is_partition, is_uniform, seed_for_suffix, seed_from_digraph, seed_from_params, span,
    span_contains, Seed, SuffixSeed,
};
pub use suffixes::{suffixes, suffixes_of_condensation};
pub use sweep::{
    lowrank_sweep, lowrank_via_suffixes, param_pairs, SweepEntry, DEFAULT_SWEEP_BUDGET,
};

pub const DEFAULT_SUFFIX_CAP: usize = 1_000_000;

/// Where a member of a [`SuffixFamily`] came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Exhaustive filter over all subsets.
    Brute,
    /// `∅` or `V`, added unconditionally.
    Trivial,
    /// A suffix of `H_ā` for these halves.
    Params {
        a_plus: Vec<usize>,
        a_minus: Vec<usize>,
    },
}

/// Deduplicated sets in canonical order, with one provenance per set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuffixFamily {
    pub sets: Vec<VertexSet>,
    pub provenance: Vec<Provenance>,
}

impl SuffixFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, x: &VertexSet) -> bool {
        self.sets.binary_search(x).is_ok()
    }
}
