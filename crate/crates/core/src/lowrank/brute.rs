use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::rank::cutrank;
use crate::vset::VertexSet;

use super::{Provenance, SuffixFamily};

pub const DEFAULT_BRUTE_MAX_N: usize = 16;

/// All `X ⊆ V(G)` with `cutrank(X) ≤ r`, by testing every subset.
pub fn brute_lowrank(g: &ColoredGraph, r: usize, max_n: usize) -> Result<SuffixFamily> {
    let n = g.n();
    if n > max_n || n >= 63 {
        return Err(Error::TooLarge(format!(
            "exhaustive subset search is capped at {max_n} vertices, graph has {n}"
        )));
    }
    let mut sets: Vec<VertexSet> = (0..1u64 << n)
        .map(|mask| VertexSet::from_mask(n, mask))
        .filter(|x| cutrank(g, x) <= r)
        .collect();
    sets.sort();
    let provenance = vec![Provenance::Brute; sets.len()];
    Ok(SuffixFamily { sets, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn edgeless_graph_everything_has_rank_zero() {
        let fam = brute_lowrank(&ColoredGraph::empty(3), 0, 16).unwrap();
        assert_eq!(fam.len(), 8);
    }

    #[test]
    fn connected_path_only_trivial_sets() {
        let fam = brute_lowrank(&generators::path(3).unwrap(), 0, 16).unwrap();
        assert_eq!(fam.sets, vec![VertexSet::empty(3), VertexSet::full(3)]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            brute_lowrank(&ColoredGraph::empty(17), 0, 16),
            Err(Error::TooLarge(_))
        ));
    }
}
