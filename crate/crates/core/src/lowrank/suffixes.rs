use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::scc::{condense, SccCondensation};
use crate::vset::VertexSet;

/// All suffixes (out-closed vertex sets) of `h`, sorted, failing past `cap`.
pub fn suffixes(h: &Digraph, cap: usize) -> Result<Vec<VertexSet>> {
    suffixes_of_condensation(&condense(h), cap)
}

/// Suffixes as out-closed sets of components.
///
/// Components are decided sinks first, so when component `c` is reached all
/// of its successors are already decided and `c` may be taken exactly when
/// they were all taken. Every branch ends in a distinct suffix.
pub fn suffixes_of_condensation(cond: &SccCondensation, cap: usize) -> Result<Vec<VertexSet>> {
    let k = cond.comp_count();
    let mut out = Vec::new();
    let mut chosen = VertexSet::empty(k);
    walk(cond, 0, &mut chosen, &mut out, cap)?;
    out.sort();
    Ok(out)
}

fn walk(
    cond: &SccCondensation,
    c: usize,
    chosen: &mut VertexSet,
    out: &mut Vec<VertexSet>,
    cap: usize,
) -> Result<()> {
    if c == cond.comp_count() {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(cond.expand(chosen));
        return Ok(());
    }
    walk(cond, c + 1, chosen, out, cap)?;
    if cond.dag_out[c].is_subset(chosen) {
        chosen.insert(c);
        walk(cond, c + 1, chosen, out, cap)?;
        chosen.remove(c);
    }
    Ok(())
}
