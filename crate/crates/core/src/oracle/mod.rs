//! Brute-force sparsity checks and the seeded face-graph corpus.
//!
//! Sparsity is decided over vertex subsets only. Deleting an edge raises the
//! freedom number by one, so for a fixed vertex set the induced subgraph has
//! the least freedom of all subgraphs on that set, and any violating subgraph
//! can be grown to a violating induced one. The `(3,6)` exemption for
//! subgraphs with at most one edge survives this argument because adding
//! edges never lowers the edge count below two.

mod corpus;

pub use corpus::{
    classify, generate_corpus, random_sphere, CarveStrategy, CorpusConfig, CorpusEntry, MAX_CORPUS_VERTICES,
};

use alloc::vec::Vec;

use crate::graph::{Multigraph, SimpleGraph, VertexId};
use crate::{Error, Result};

/// Default vertex bound for [`check_36`].
pub const CHECK_36_BOUND: usize = 24;
/// Default vertex bound for [`check_30`].
pub const CHECK_30_BOUND: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsityReport {
    pub tight: bool,
    pub sparse: bool,
    /// A vertex set whose induced subgraph breaks the count, chosen with the
    /// least freedom and then the fewest vertices.
    pub witness: Option<Vec<VertexId>>,
    pub witness_freedom: Option<i64>,
}

/// `(3,6)`-sparsity: `f(J) >= 6` for every subgraph `J` with at least two
/// edges. Tight additionally requires `f(g) = 6`.
pub fn check_36(g: &SimpleGraph) -> Result<SparsityReport> {
    check_36_bounded(g, CHECK_36_BOUND)
}

pub fn check_36_bounded(g: &SimpleGraph, bound: usize) -> Result<SparsityReport> {
    check_counts(g.as_multigraph(), bound, 6, 2)
}

/// `(3,0)`-sparsity: `f(J) >= 0` for every subgraph. Tight additionally
/// requires `f(g) = 0`.
pub fn check_30(g: &Multigraph) -> Result<SparsityReport> {
    check_30_bounded(g, CHECK_30_BOUND)
}

pub fn check_30_bounded(g: &Multigraph, bound: usize) -> Result<SparsityReport> {
    check_counts(g, bound, 0, 0)
}

fn check_counts(g: &Multigraph, bound: usize, threshold: i64, min_edges: usize) -> Result<SparsityReport> {
    let n = g.vertex_count();
    if n > bound || n > 63 {
        return Err(Error::SizeBoundExceeded { vertices: n, bound: bound.min(63) });
    }
    // layers[v][m] holds the neighbours joined to v by more than m edges.
    let mut loops = alloc::vec![0usize; n];
    let mut multiplicity = alloc::vec![alloc::vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        if u == v {
            loops[u] += 1;
        } else {
            multiplicity[u][v] += 1;
            multiplicity[v][u] += 1;
        }
    }
    let layers: Vec<Vec<u64>> = (0..n)
        .map(|v| {
            let top = multiplicity[v].iter().copied().max().unwrap_or(0);
            (0..top).map(|m| (0..n).filter(|&w| multiplicity[v][w] > m).fold(0u64, |acc, w| acc | 1 << w)).collect()
        })
        .collect();

    let mut best: Option<(i64, u32, u64)> = None;
    let mut mask = 0u64;
    let mut edges = 0i64;
    let mut size = 0i64;
    for step in 1u64..(1u64 << n) {
        let v = step.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let adding = mask & bit == 0;
        let others = mask & !bit;
        let delta = loops[v] as i64 + layers[v].iter().map(|l| (l & others).count_ones() as i64).sum::<i64>();
        if adding {
            mask |= bit;
            edges += delta;
            size += 1;
        } else {
            mask &= !bit;
            edges -= delta;
            size -= 1;
        }
        let f = 3 * size - edges;
        if edges as usize >= min_edges && f < threshold {
            let key = (f, mask.count_ones(), mask);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1) || ((key.0, key.1) == (b.0, b.1) && key.2 < b.2)) {
                best = Some(key);
            }
        }
    }
    let sparse = best.is_none();
    let witness = best.map(|(_, _, m)| (0..n).filter(|&v| m >> v & 1 == 1).collect());
    Ok(SparsityReport {
        tight: sparse && g.freedom() == threshold,
        sparse,
        witness,
        witness_freedom: best.map(|b| b.0),
    })
}
