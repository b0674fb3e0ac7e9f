#![allow(dead_code)]

use lrmso::generators::{self, Family};
use lrmso::{ColoredGraph, VertexSet};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

/// Named graph of the shared test corpus.
pub struct Case {
    pub name: String,
    pub graph: ColoredGraph,
}

fn case(name: String, graph: ColoredGraph) -> Case {
    Case { name, graph }
}

/// Every structured family instance with at most `max_n` vertices.
pub fn structured(max_n: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(case(format!("path({n})"), generators::path(n).unwrap()));
    }
    for n in 3..=max_n {
        out.push(case(format!("cycle({n})"), generators::cycle(n).unwrap()));
        let g = generators::generate(&Family::ComplementOfCycle(n)).unwrap();
        out.push(case(format!("complement_of_cycle({n})"), g));
    }
    for a in 3..=max_n {
        for b in a..=max_n - a.min(max_n) {
            if a + b <= max_n {
                let g = generators::generate(&Family::ComplementOfTwoCycles(a, b)).unwrap();
                out.push(case(format!("complement_of_two_cycles({a},{b})"), g));
            }
        }
    }
    for a in 1..max_n {
        for b in a..=max_n - a {
            let g = generators::generate(&Family::Biclique(a, b)).unwrap();
            out.push(case(format!("biclique({a},{b})"), g));
        }
    }
    out
}

/// Seeded `G(n, p)` graphs with `n` cycling through `min_n..=max_n`.
pub fn random_graphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Case> {
    let ps = [0.2, 0.35, 0.5, 0.65, 0.8];
    (0..count)
        .map(|i| {
            let n = min_n + i % (max_n - min_n + 1);
            let p = ps[i % ps.len()];
            let s = seed.wrapping_add(i as u64);
            case(format!("random({n},{p},{s})"), generators::random(n, p, s).unwrap())
        })
        .collect()
}

/// Structured families up to `max_n` topped up with random graphs to `total`.
pub fn corpus(max_n: usize, total: usize, seed: u64) -> Vec<Case> {
    let mut out = structured(max_n);
    let missing = total.saturating_sub(out.len());
    out.extend(random_graphs(missing, 2, max_n, seed));
    out
}

pub struct Sampler(SplitMix64);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler(SplitMix64::seed_from_u64(seed))
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.0.next_u64() % bound as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        generators::unit_interval(self.0.next_u64()) < p
    }

    pub fn subset(&mut self, n: usize) -> VertexSet {
        VertexSet::from_indices(n, (0..n).filter(|_| self.chance(0.5)).collect::<Vec<_>>())
    }
}

/// Subsets of `0..n` as bitmask-built sets.
pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |m| VertexSet::from_mask(n, m))
}
