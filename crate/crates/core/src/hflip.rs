//! The digraph `H_ā` whose suffixes are the sets of bounded cutrank.
//!
//! The parameters come in two halves `ā⁺` and `ā⁻`. When the halves are
//! disjoint and `ā⁺` has cutrank at most `r` inside `G[ā]` the tuple is
//! admissible and `u → v` is an arc iff one of
//!
//! 1. `u ∈ ā⁻` or `v ∈ ā⁺`;
//! 2. `φ⁺(u) = ⊥` and `v ∈ ā⁻`;
//! 3. `u ∈ ā⁺` and `φ⁻(v) = ⊥`;
//! 4. `E(u, v)` xor `[φ⁺(u) ≠ ⊥ ∧ φ⁻(v) ≠ ⊥ ∧ E(φ⁺(u), φ⁻(v))]`
//!
//! holds, where `φ⁺(v)` is the first member of `ā⁺` with the same
//! neighbourhood in `ā⁻` as `v`, and `φ⁻` is defined symmetrically.
//! Otherwise `u → v` is an arc iff `u ∈ ā`, `v ∈ ā` or `uv ∈ E(G)`.

use crate::error::{Error, Result};
use crate::flip::{apply_flip, FlipSpec, Pattern, TypeClasses};
use crate::graph::{ColoredGraph, Digraph};
use crate::rank::CutMatrix;
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepAssignment {
    pub a_plus: VertexSet,
    pub a_minus: VertexSet,
    pub phi_plus: Vec<Option<usize>>,
    pub phi_minus: Vec<Option<usize>>,
}

impl RepAssignment {
    pub fn new(g: &ColoredGraph, a_plus: &VertexSet, a_minus: &VertexSet) -> Self {
        let twin = |half: &VertexSet, other: &VertexSet| -> Vec<Option<usize>> {
            let rows: Vec<(usize, VertexSet)> = half
                .iter()
                .map(|p| (p, g.neighbors(p).intersection(other)))
                .collect();
            (0..g.n())
                .map(|v| {
                    let row = g.neighbors(v).intersection(other);
                    rows.iter().find(|(_, r)| *r == row).map(|&(p, _)| p)
                })
                .collect()
        };
        RepAssignment {
            a_plus: a_plus.clone(),
            a_minus: a_minus.clone(),
            phi_plus: twin(a_plus, a_minus),
            phi_minus: twin(a_minus, a_plus),
        }
    }
}

#[derive(Clone, Debug)]
pub struct HDigraph {
    pub digraph: Digraph,
    pub reps: RepAssignment,
    pub admissible: bool,
}

pub fn is_admissible(g: &ColoredGraph, a_plus: &VertexSet, a_minus: &VertexSet, r: usize) -> bool {
    if a_plus.intersects(a_minus) {
        return false;
    }
    let rows = a_plus
        .iter()
        .map(|u| g.neighbors(u).intersection(a_minus))
        .collect();
    let m = CutMatrix {
        rows,
        row_index: a_plus.to_vec(),
        col_index: (0..g.n()).collect(),
    };
    m.rank_f2() <= r
}

pub fn build_h_digraph(
    g: &ColoredGraph,
    a_plus: &VertexSet,
    a_minus: &VertexSet,
    r: usize,
) -> HDigraph {
    let reps = RepAssignment::new(g, a_plus, a_minus);
    let admissible = is_admissible(g, a_plus, a_minus, r);
    let digraph = if admissible {
        let RepAssignment {
            phi_plus,
            phi_minus,
            ..
        } = &reps;
        Digraph::from_fn(g.n(), |u, v| {
            a_minus.contains(u)
                || a_plus.contains(v)
                || (phi_plus[u].is_none() && a_minus.contains(v))
                || (a_plus.contains(u) && phi_minus[v].is_none())
                || (g.has_edge(u, v)
                    ^ match (phi_plus[u], phi_minus[v]) {
                        (Some(p), Some(m)) => g.has_edge(p, m),
                        _ => false,
                    })
        })
    } else {
        let params = a_plus.union(a_minus);
        Digraph::from_fn(g.n(), |u, v| {
            params.contains(u) || params.contains(v) || g.has_edge(u, v)
        })
    };
    HDigraph {
        digraph,
        reps,
        admissible,
    }
}

/// Parameter tuple `ā⁺ ā⁻`, each half in ascending order.
pub fn h_params(a_plus: &VertexSet, a_minus: &VertexSet) -> Vec<usize> {
    a_plus.iter().chain(a_minus.iter()).collect()
}

/// A ground flip spec with `apply_flip(G, spec, h_params(ā⁺, ā⁻)) = H_ā`.
///
/// Every pair of realized atomic types gets one exact pattern pair when the
/// arcs between the two classes differ from the edges.
pub fn h_flip_spec(
    g: &ColoredGraph,
    a_plus: &VertexSet,
    a_minus: &VertexSet,
    r: usize,
) -> Result<FlipSpec> {
    let h = build_h_digraph(g, a_plus, a_minus, r).digraph;
    let params = h_params(a_plus, a_minus);
    let classes = TypeClasses::of(g, &params);
    let palette: Vec<String> = g.colors().keys().cloned().collect();
    let mut pairs = Vec::new();
    for (k, mk) in classes.members.iter().enumerate() {
        for (l, ml) in classes.members.iter().enumerate() {
            let flipped = mk
                .iter()
                .flat_map(|u| ml.iter().map(move |v| (u, v)))
                .find(|&(u, v)| u != v)
                .is_some_and(|(u, v)| h.has_arc(u, v) != g.has_edge(u, v));
            if flipped {
                pairs.push((
                    Pattern::exact(&classes.types[k], &palette),
                    Pattern::exact(&classes.types[l], &palette),
                ));
            }
        }
    }
    let spec = FlipSpec::new("H", params.len(), false, pairs)?;
    if apply_flip(g, &spec, &params)? != h {
        return Err(Error::BadParameter(
            "arcs of H are not determined by atomic types".into(),
        ));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, figure1::*};

    fn halves() -> (VertexSet, VertexSet) {
        (
            VertexSet::from_indices(8, [A1P, A2P]),
            VertexSet::from_indices(8, [A1M, A2M]),
        )
    }

    #[test]
    fn example_phi_tables() {
        let g = generators::figure1_graph();
        let (p, m) = halves();
        let h = build_h_digraph(&g, &p, &m, 2);
        assert!(h.admissible);
        let expected_plus = [None, None, Some(A1P), Some(A2P), None, Some(A1P), Some(A2P), Some(A2P)];
        let expected_minus = [
            Some(A1M),
            Some(A2M),
            None,
            None,
            Some(A1M),
            Some(A1M),
            Some(A1M),
            None,
        ];
        assert_eq!(h.reps.phi_plus, expected_plus);
        assert_eq!(h.reps.phi_minus, expected_minus);
        assert!(h.digraph.has_arc(W2, W3));
        assert!(!h.digraph.has_arc(W3, W2));
    }

    #[test]
    fn overlapping_halves_are_inadmissible() {
        let g = generators::path(4).unwrap();
        let p = VertexSet::from_indices(4, [1]);
        let h = build_h_digraph(&g, &p, &p, 3);
        assert!(!h.admissible);
        // the shared parameter is universal
        assert!((0..4).filter(|&v| v != 1).all(|v| h.digraph.has_arc(1, v) && h.digraph.has_arc(v, 1)));
    }

    #[test]
    fn rank_threshold_controls_admissibility() {
        let g = generators::figure1_graph();
        let (p, m) = halves();
        assert!(is_admissible(&g, &p, &m, 2));
        assert!(!is_admissible(&g, &p, &m, 1));
    }

    #[test]
    fn ground_spec_reproduces_h() {
        let g = generators::figure1_graph();
        let (p, m) = halves();
        let spec = h_flip_spec(&g, &p, &m, 2).unwrap();
        assert_eq!(spec.k, 4);
        let d = apply_flip(&g, &spec, &h_params(&p, &m)).unwrap();
        assert_eq!(d, build_h_digraph(&g, &p, &m, 2).digraph);
    }
}
