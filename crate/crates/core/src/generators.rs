//! Deterministic graph families used as test corpora.
//!
//! `random(n, p, seed)` draws edges with SplitMix64 (Vigna's reference
//! `splitmix64.c`, state initialised to `seed`): for every pair `u < v` in
//! lexicographic order one 64-bit word `x` is drawn and the edge is present iff
//! `(x >> 11) * 2^-53 < p`. Any implementation of SplitMix64 reproduces the
//! same graphs bit for bit.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::vset::VertexSet;

/// Vertex indices of the eight-vertex example graph.
pub mod figure1 {
    pub const A1M: usize = 0;
    pub const A2M: usize = 1;
    pub const A1P: usize = 2;
    pub const A2P: usize = 3;
    pub const W1: usize = 4;
    pub const W2: usize = 5;
    pub const W3: usize = 6;
    pub const W4: usize = 7;

    pub const NAMES: [&str; 8] = ["a1m", "a2m", "a1p", "a2p", "w1", "w2", "w3", "w4"];

    pub const EDGES: [(usize, usize); 10] = [
        (A1P, W1),
        (A1P, W2),
        (A1P, W3),
        (A1M, W2),
        (A2M, W2),
        (A2M, W3),
        (A2M, W4),
        (A1P, A1M),
        (A1P, A2M),
        (A2P, A2M),
    ];

    /// Color marking the positive parameter half.
    pub const PLUS_COLOR: &str = "APlus";
    /// Color marking the negative parameter half.
    pub const MINUS_COLOR: &str = "AMinus";
}

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    ComplementOfCycle(usize),
    ComplementOfTwoCycles(usize, usize),
    Biclique(usize, usize),
    Random { n: usize, p: f64, seed: u64 },
    Figure1,
}

impl Family {
    /// Parses a family name and its numeric parameters, e.g. `("biclique", [2, 3])`.
    /// The random family takes `n` and `p`; its seed is passed separately.
    pub fn from_name(name: &str, params: &[f64], seed: Option<u64>) -> Result<Family> {
        let count = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::BadParameter(format!(
                    "family `{name}` takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let int = |i: usize| -> Result<usize> {
            let x = params[i];
            if x >= 0.0 && x.fract() == 0.0 {
                Ok(x as usize)
            } else {
                Err(Error::BadParameter(format!("`{x}` is not a vertex count")))
            }
        };
        let family = match name {
            "path" => {
                count(1)?;
                Family::Path(int(0)?)
            }
            "cycle" => {
                count(1)?;
                Family::Cycle(int(0)?)
            }
            "complement_of_cycle" => {
                count(1)?;
                Family::ComplementOfCycle(int(0)?)
            }
            "complement_of_two_cycles" => {
                count(2)?;
                Family::ComplementOfTwoCycles(int(0)?, int(1)?)
            }
            "biclique" => {
                count(2)?;
                Family::Biclique(int(0)?, int(1)?)
            }
            "random" => {
                count(2)?;
                let seed = seed.ok_or_else(|| {
                    Error::BadParameter("the random family requires an explicit seed".into())
                })?;
                Family::Random {
                    n: int(0)?,
                    p: params[1],
                    seed,
                }
            }
            "figure1" => {
                count(0)?;
                Family::Figure1
            }
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}

pub fn generate(family: &Family) -> Result<ColoredGraph> {
    match *family {
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::ComplementOfCycle(n) => Ok(cycle(n)?.complement()),
        Family::ComplementOfTwoCycles(n, m) => {
            let mut g = ColoredGraph::empty(n + m);
            add_cycle(&mut g, 0, n)?;
            add_cycle(&mut g, n, m)?;
            Ok(g.complement())
        }
        Family::Biclique(a, b) => {
            let mut g = ColoredGraph::empty(a + b);
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v)?;
                }
            }
            Ok(g)
        }
        Family::Random { n, p, seed } => random(n, p, seed),
        Family::Figure1 => Ok(figure1_graph()),
    }
}

pub fn path(n: usize) -> Result<ColoredGraph> {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    ColoredGraph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<ColoredGraph> {
    let mut g = ColoredGraph::empty(n);
    add_cycle(&mut g, 0, n)?;
    Ok(g)
}

fn add_cycle(g: &mut ColoredGraph, offset: usize, len: usize) -> Result<()> {
    if len < 3 {
        return Err(Error::BadParameter(format!(
            "a cycle needs at least 3 vertices, got {len}"
        )));
    }
    for i in 0..len {
        g.add_edge(offset + i, offset + (i + 1) % len)?;
    }
    Ok(())
}

pub fn random(n: usize, p: f64, seed: u64) -> Result<ColoredGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut g = ColoredGraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let x = rng.next_u64();
            if unit_interval(x) < p {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Top 53 bits of `x` as a float in `[0, 1)`.
pub fn unit_interval(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

pub fn figure1_graph() -> ColoredGraph {
    use figure1::*;
    ColoredGraph::from_edges(8, &EDGES)
        .and_then(|g| g.with_color(PLUS_COLOR, VertexSet::from_indices(8, [A1P, A2P])))
        .and_then(|g| g.with_color(MINUS_COLOR, VertexSet::from_indices(8, [A1M, A2M])))
        .expect("figure1 edge list is valid")
}
