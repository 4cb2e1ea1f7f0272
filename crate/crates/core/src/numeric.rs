//! Exact generic rank of the 3-dimensional rigidity matrix.
//!
//! Coordinates are drawn uniformly from the prime field `F_p`,
//! `p = 2^61 - 1`. Every `r x r` minor of the rigidity matrix is a polynomial
//! of degree `r` in the coordinates, so by the Schwartz-Zippel lemma a random
//! placement underestimates the generic rank with probability at most `r/p`.
//! Independent seeds multiply these bounds.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::SimpleGraph;
use crate::{Error, Result};

pub const PRIME: u64 = (1 << 61) - 1;
pub const DEFAULT_SEEDS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankVerdict {
    /// Rigid and independent.
    MinimallyRigid,
    /// Rigid with redundant edges.
    Rigid,
    /// Independent but not rigid.
    Independent,
    /// Neither rigid nor independent.
    Flexible,
}

impl RankVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            RankVerdict::MinimallyRigid => "minimally-rigid",
            RankVerdict::Rigid => "rigid",
            RankVerdict::Independent => "independent",
            RankVerdict::Flexible => "flexible",
        }
    }
}

impl fmt::Display for RankVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub rank: usize,
    /// `min(|E|, 3|V| - 6)`.
    pub target: usize,
    /// Placements tried; stops early once the rank reaches `target`.
    pub seeds_used: usize,
    pub rigid: bool,
    pub independent: bool,
    pub verdict: RankVerdict,
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {} target {} verdict {} seeds {}", self.rank, self.target, self.verdict, self.seeds_used)
    }
}

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

/// Uniform coordinates in `F_p` for `n` vertices.
pub fn random_placement(n: usize, seed: u64) -> Vec<[u64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| [rng.gen_range(0..PRIME), rng.gen_range(0..PRIME), rng.gen_range(0..PRIME)]).collect()
}

/// Rank over `F_p` of the rigidity matrix at the given placement. Row `ij`
/// holds `p_i - p_j` in the columns of `i` and `p_j - p_i` in those of `j`.
pub fn rigidity_rank_at(g: &SimpleGraph, points: &[[u64; 3]]) -> usize {
    let cols = 3 * g.vertex_count();
    let mut rows: Vec<Vec<u64>> = g
        .edges()
        .iter()
        .map(|&(i, j)| {
            let mut row = vec![0u64; cols];
            for d in 0..3 {
                let diff = sub(points[i][d] % PRIME, points[j][d] % PRIME);
                row[3 * i + d] = diff;
                row[3 * j + d] = sub(0, diff);
            }
            row
        })
        .collect();
    rank_mod_p(&mut rows, cols)
}

fn rank_mod_p(rows: &mut [Vec<u64>], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow(rows[rank][c], PRIME - 2);
        let (done, rest) = rows.split_at_mut(rank + 1);
        let pivot = &done[rank];
        for row in rest {
            if row[c] == 0 {
                continue;
            }
            let factor = mul(row[c], inv);
            for (x, &p) in row[c..cols].iter_mut().zip(&pivot[c..cols]) {
                *x = sub(*x, mul(factor, p));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Generic rank estimate: the maximum over `seeds` random placements, with
/// seeds `0..seeds`.
pub fn euclidean_rigidity_rank(g: &SimpleGraph, seeds: usize) -> Result<RankReport> {
    euclidean_rigidity_rank_from(g, seeds, 0)
}

/// As [`euclidean_rigidity_rank`] with seeds `first..first + seeds`.
pub fn euclidean_rigidity_rank_from(g: &SimpleGraph, seeds: usize, first: u64) -> Result<RankReport> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    if seeds == 0 {
        return Err(Error::InvalidParameter("at least one seed is required"));
    }
    let e = g.edge_count();
    let full = 3 * n - 6;
    let target = e.min(full);
    let mut rank = 0;
    let mut seeds_used = 0;
    for s in 0..seeds {
        seeds_used += 1;
        rank = rank.max(rigidity_rank_at(g, &random_placement(n, first.wrapping_add(s as u64))));
        if rank == target {
            break;
        }
    }
    let rigid = rank == full;
    let independent = rank == e;
    let verdict = match (rigid, independent) {
        (true, true) => RankVerdict::MinimallyRigid,
        (true, false) => RankVerdict::Rigid,
        (false, true) => RankVerdict::Independent,
        (false, false) => RankVerdict::Flexible,
    };
    Ok(RankReport { rank, target, seeds_used, rigid, independent, verdict })
}

/// `|E| = 3|V| - 6` and the rigidity matrix has full row rank.
pub fn is_minimally_3_rigid_numeric(g: &SimpleGraph) -> Result<bool> {
    if g.vertex_count() < 3 {
        return Err(Error::TooFewVertices(g.vertex_count()));
    }
    if g.edge_count() != 3 * g.vertex_count() - 6 {
        return Ok(false);
    }
    Ok(euclidean_rigidity_rank(g, DEFAULT_SEEDS)?.verdict == RankVerdict::MinimallyRigid)
}

/// Upper bound on the probability that every seed underestimates the generic
/// rank of a graph with `vertices` vertices: `(r/p)^seeds` with
/// `r = 3|V| - 6`.
pub fn failure_bound(vertices: usize, seeds: usize) -> f64 {
    let r = (3 * vertices).saturating_sub(6).max(1) as f64;
    let per_seed = r / PRIME as f64;
    (0..seeds).fold(1.0, |acc, _| acc * per_seed)
}
