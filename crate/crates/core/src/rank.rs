//! Cut matrices and their rank measures over F2 and Q.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::graph::ColoredGraph;
use crate::vset::VertexSet;

/// `{0,1}` matrix with labelled rows and columns.
///
/// For a cut matrix of `X`, rows are the vertices of `X`, columns the vertices
/// of its complement, and entry `(u, v)` is 1 iff `uv` is an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutMatrix {
    pub rows: Vec<VertexSet>,
    pub row_index: Vec<usize>,
    pub col_index: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankMeasures {
    pub rk_f2: usize,
    pub rk_q: usize,
    pub dv: usize,
}

impl CutMatrix {
    pub fn of(g: &ColoredGraph, x: &VertexSet) -> Self {
        let col_index: Vec<usize> = x.complement().to_vec();
        let row_index: Vec<usize> = x.to_vec();
        let rows = row_index
            .iter()
            .map(|&u| g.neighbors(u).project(&col_index))
            .collect();
        CutMatrix {
            rows,
            row_index,
            col_index,
        }
    }

    /// Matrix from dense boolean rows, labelled `0..`.
    pub fn from_bool_rows(rows: &[Vec<bool>], cols: usize) -> Self {
        let rows_bits = rows
            .iter()
            .map(|r| VertexSet::from_indices(cols, (0..cols).filter(|&j| r[j])))
            .collect();
        CutMatrix {
            rows: rows_bits,
            row_index: (0..rows.len()).collect(),
            col_index: (0..cols).collect(),
        }
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.col_index.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn is_empty(&self) -> bool {
        self.height() == 0 || self.width() == 0
    }

    pub fn transpose(&self) -> Self {
        let h = self.height();
        let rows = (0..self.width())
            .map(|j| VertexSet::from_indices(h, (0..h).filter(|&i| self.get(i, j))))
            .collect();
        CutMatrix {
            rows,
            row_index: self.col_index.clone(),
            col_index: self.row_index.clone(),
        }
    }

    /// Rank over F2 by elimination with word-wise xor.
    pub fn rank_f2(&self) -> usize {
        let mut pivots: Vec<Option<VertexSet>> = vec![None; self.width()];
        let mut rank = 0;
        for row in &self.rows {
            let mut r = row.clone();
            while let Some(lead) = r.first() {
                match &pivots[lead] {
                    Some(p) => r.symmetric_difference_with(p),
                    None => {
                        pivots[lead] = Some(r);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }

    /// Rank over Q by fraction-free (Bareiss) elimination on big integers.
    pub fn rank_q(&self) -> usize {
        let (h, w) = (self.height(), self.width());
        let mut m: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| {
                (0..w)
                    .map(|j| if r.contains(j) { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..w {
            if rank == h {
                break;
            }
            let Some(p) = (rank..h).find(|&i| !m[i][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let (top, rest) = m.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            let pivot = &pivot_row[col];
            for row in rest.iter_mut() {
                let factor = row[col].clone();
                for j in col + 1..w {
                    let v = (pivot * &row[j] - &factor * &pivot_row[j]) / &prev;
                    row[j] = v;
                }
                row[col] = BigInt::zero();
            }
            prev = pivot.clone();
            rank += 1;
        }
        rank
    }

    /// Number of distinct rows plus number of distinct columns; 0 for empty matrices.
    pub fn diversity(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let rows: HashSet<&VertexSet> = self.rows.iter().collect();
        let t = self.transpose();
        let cols: HashSet<&VertexSet> = t.rows.iter().collect();
        rows.len() + cols.len()
    }

    pub fn measures(&self) -> RankMeasures {
        RankMeasures {
            rk_f2: self.rank_f2(),
            rk_q: self.rank_q(),
            dv: self.diversity(),
        }
    }
}

/// Rank over F2 of the adjacency matrix between `x` and its complement.
pub fn cutrank(g: &ColoredGraph, x: &VertexSet) -> usize {
    if x.is_empty() || x.is_full() {
        return 0;
    }
    // the smaller side gives fewer rows to eliminate
    if x.len() * 2 > g.n() {
        CutMatrix::of(g, &x.complement()).rank_f2()
    } else {
        CutMatrix::of(g, x).rank_f2()
    }
}

pub fn rank_measures(g: &ColoredGraph, x: &VertexSet) -> RankMeasures {
    CutMatrix::of(g, x).measures()
}

/// Keeps the first row of each class of equal rows and the first column of
/// each class of equal columns.
pub fn twin_reduce(m: &CutMatrix) -> CutMatrix {
    let mut seen = HashSet::new();
    let keep_rows: Vec<usize> = (0..m.height())
        .filter(|&i| seen.insert(m.rows[i].clone()))
        .collect();
    let t = m.transpose();
    let mut seen = HashSet::new();
    let keep_cols: Vec<usize> = (0..m.width())
        .filter(|&j| seen.insert(t.rows[j].clone()))
        .collect();
    CutMatrix {
        rows: keep_rows.iter().map(|&i| m.rows[i].project(&keep_cols)).collect(),
        row_index: keep_rows.iter().map(|&i| m.row_index[i]).collect(),
        col_index: keep_cols.iter().map(|&j| m.col_index[j]).collect(),
    }
}

/// For each distinct neighbourhood outside `x` among members of `x`, the
/// member with the smallest index.
pub fn representatives(g: &ColoredGraph, x: &VertexSet) -> VertexSet {
    let outside = x.complement();
    let mut seen: HashMap<VertexSet, usize> = HashMap::new();
    let mut reps = VertexSet::empty(g.n());
    for v in x.iter() {
        let row = g.neighbors(v).intersection(&outside);
        seen.entry(row).or_insert_with(|| {
            reps.insert(v);
            v
        });
    }
    reps
}
