//! Strongly connected components and the reachability order on them.

use crate::graph::Digraph;
use crate::vset::VertexSet;

/// Condensation of a digraph.
///
/// Component indices are in reverse topological order: every arc of the
/// condensation goes from a higher index to a lower one, so component `0`
/// is a sink. `reach[c]` holds every component reachable from `c`,
/// including `c` itself.
#[derive(Clone, Debug)]
pub struct SccCondensation {
    pub comp_of: Vec<usize>,
    pub members: Vec<VertexSet>,
    pub dag_out: Vec<VertexSet>,
    pub reach: Vec<VertexSet>,
}

impl SccCondensation {
    pub fn comp_count(&self) -> usize {
        self.members.len()
    }

    /// `u <= v`: a directed path leads from `u` to `v` (reflexive).
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.reach[self.comp_of[u]].contains(self.comp_of[v])
    }

    /// `u < v`: `u <= v` but not `v <= u`.
    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.comp_of[u] != self.comp_of[v] && self.leq(u, v)
    }

    pub fn same(&self, u: usize, v: usize) -> bool {
        self.comp_of[u] == self.comp_of[v]
    }

    /// Components strictly below `c` (those that reach `c`).
    pub fn strictly_below(&self, c: usize) -> VertexSet {
        let k = self.comp_count();
        let mut s = VertexSet::empty(k);
        for d in 0..k {
            if d != c && self.reach[d].contains(c) {
                s.insert(d);
            }
        }
        s
    }

    /// Union of the vertex sets of the given components.
    pub fn expand(&self, comps: &VertexSet) -> VertexSet {
        let n = self.comp_of.len();
        let mut s = VertexSet::empty(n);
        for c in comps.iter() {
            s.union_with(&self.members[c]);
        }
        s
    }
}

/// Tarjan's algorithm, iterative.
pub fn condense(h: &Digraph) -> SccCondensation {
    const UNVISITED: usize = usize::MAX;
    let n = h.n();
    let succ: Vec<Vec<usize>> = (0..n).map(|v| h.out_neighbors(v).to_vec()).collect();

    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp_of = vec![UNVISITED; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its successor list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(top) = call.last_mut() {
            let v = top.0;
            if top.1 < succ[v].len() {
                let w = succ[v][top.1];
                top.1 += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let c = comps.len();
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp_of[w] = c;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }

    let k = comps.len();
    let members: Vec<VertexSet> = comps
        .iter()
        .map(|c| VertexSet::from_indices(n, c.iter().copied()))
        .collect();
    let mut dag_out = vec![VertexSet::empty(k); k];
    for (u, v) in h.arcs() {
        let (cu, cv) = (comp_of[u], comp_of[v]);
        if cu != cv {
            debug_assert!(cv < cu);
            dag_out[cu].insert(cv);
        }
    }
    let mut reach: Vec<VertexSet> = Vec::with_capacity(k);
    for c in 0..k {
        let mut r = VertexSet::singleton(k, c);
        for d in dag_out[c].iter() {
            r.union_with(&reach[d]);
        }
        reach.push(r);
    }

    SccCondensation {
        comp_of,
        members,
        dag_out,
        reach,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle_feeding_a_sink() {
        let h = Digraph::from_arcs(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        let c = condense(&h);
        assert_eq!(c.comp_count(), 2);
        assert!(c.same(0, 1));
        assert!(!c.same(1, 2));
        let top = c.comp_of[0];
        assert_eq!(c.reach[top].len(), 2);
        assert!(c.lt(0, 2) && !c.lt(2, 0) && !c.lt(0, 1));
    }

    #[test]
    fn edgeless_has_singleton_components() {
        let c = condense(&Digraph::empty(3));
        assert_eq!(c.comp_count(), 3);
        for k in 0..3 {
            assert_eq!(c.reach[k].to_vec(), vec![k]);
        }
    }

    #[test]
    fn directed_triangle_is_one_component() {
        let h = Digraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(condense(&h).comp_count(), 1);
    }

    #[test]
    fn long_path_does_not_overflow_the_stack() {
        let n = 5_000;
        let arcs: Vec<(usize, usize)> = (0..n - 1).map(|v| (v, v + 1)).collect();
        let c = condense(&Digraph::from_arcs(n, &arcs).unwrap());
        assert_eq!(c.comp_count(), n);
        assert!(c.lt(0, n - 1));
    }
}
