//! Floating point independence check for bar frameworks in `ℓ_p^3`.
//!
//! The rigidity matrix of `(G, x)` in `ℓ_p^3` has, for edge `ij`, the entries
//! `sign(d)|d|^(p-1)` of `d = x_i - x_j` (componentwise) in the columns of
//! `i` and their negatives in those of `j`. The result is numerical evidence
//! only: rank is read off singular values against a relative tolerance.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigidkit_core::SimpleGraph;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_TRIALS: usize = 5;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LpError {
    #[error("p must lie in (1, inf) and differ from 2, got {0}")]
    Exponent(f64),
    #[error("at least three trials are required, got {0}")]
    Trials(usize),
    #[error("tolerance must be positive, got {0}")]
    Tolerance(f64),
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct LpReport {
    pub independent: bool,
    /// Numerical rank in each trial.
    pub ranks: Vec<usize>,
    pub edges: usize,
    /// Smallest ratio of the least to the largest singular value over the
    /// trials.
    pub min_relative_singular_value: f64,
}

pub fn lp_rigidity_matrix(g: &SimpleGraph, points: &[[f64; 3]], p: f64) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(g.edge_count(), 3 * g.vertex_count());
    for (row, &(i, j)) in g.edges().iter().enumerate() {
        for d in 0..3 {
            let diff = points[i][d] - points[j][d];
            let entry = diff.signum() * diff.abs().powf(p - 1.0);
            m[(row, 3 * i + d)] = entry;
            m[(row, 3 * j + d)] = -entry;
        }
    }
    m
}

/// Runs `trials` random placements in `[-1, 1]^3` (seeded from `seed`) and
/// reports independence when every trial has numerical rank `|E|`.
pub fn lp_independence_report(
    g: &SimpleGraph,
    p: f64,
    trials: usize,
    tol: f64,
    seed: u64,
) -> Result<LpReport, LpError> {
    if p.is_nan() || p <= 1.0 || p == 2.0 || !p.is_finite() {
        return Err(LpError::Exponent(p));
    }
    if trials < 3 {
        return Err(LpError::Trials(trials));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(LpError::Tolerance(tol));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = g.edge_count();
    let mut ranks = Vec::with_capacity(trials);
    let mut min_ratio = f64::INFINITY;
    for _ in 0..trials {
        let points: Vec<[f64; 3]> = (0..g.vertex_count())
            .map(|_| [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)])
            .collect();
        let m = lp_rigidity_matrix(g, &points, p);
        // Rank of M equals rank of M^T; the SVD of the wide matrix is cheaper
        // through its transpose.
        let sv = m.transpose().singular_values();
        let largest = sv.iter().copied().fold(0.0, f64::max);
        let rank = sv.iter().filter(|&&s| s > tol * largest).count();
        if e > 0 && largest > 0.0 {
            let mut sorted: Vec<f64> = sv.iter().copied().collect();
            sorted.sort_by(|a, b| b.total_cmp(a));
            let least = sorted.get(e - 1).copied().unwrap_or(0.0);
            min_ratio = min_ratio.min(least / largest);
        }
        ranks.push(rank);
    }
    Ok(LpReport {
        independent: ranks.iter().all(|&r| r == e),
        ranks,
        edges: e,
        min_relative_singular_value: if min_ratio.is_finite() { min_ratio } else { 0.0 },
    })
}

pub fn lp_independence_check(g: &SimpleGraph, p: f64, trials: usize, tol: f64) -> Result<bool, LpError> {
    Ok(lp_independence_report(g, p, trials, tol, 0)?.independent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rigidkit_core::construct::discus_and_hole;
    use rigidkit_core::facegraph::fixtures::hexagon_three_quads;

    fn double_banana() -> SimpleGraph {
        let mut edges = Vec::new();
        for side in [[2, 3, 4], [5, 6, 7]] {
            let vs = [0, 1, side[0], side[1], side[2]];
            for i in 0..5 {
                for j in i + 1..5 {
                    if (vs[i], vs[j]) != (0, 1) {
                        edges.push((vs[i], vs[j]));
                    }
                }
            }
        }
        SimpleGraph::from_edges(8, edges).unwrap()
    }

    #[test]
    fn triangle_is_independent() {
        assert!(lp_independence_check(&SimpleGraph::complete(3), 4.0, 5, DEFAULT_TOLERANCE).unwrap());
    }

    #[test]
    fn hexagon_three_quads_dagger_is_independent() {
        let g = discus_and_hole(&hexagon_three_quads());
        let r = lp_independence_report(&g, 4.0, DEFAULT_TRIALS, DEFAULT_TOLERANCE, 0).unwrap();
        assert!(r.independent, "{r:?}");
        assert_eq!(r.ranks, vec![27; 5]);
    }

    #[test]
    fn double_banana_in_l4() {
        // In ℓ_4 only translations are trivial, so 18 = 3·8 − 6 edges need not
        // be dependent; this records what the check computes.
        let r = lp_independence_report(&double_banana(), 4.0, DEFAULT_TRIALS, DEFAULT_TOLERANCE, 0).unwrap();
        assert_eq!(r.edges, 18);
        assert!(r.independent, "{r:?}");
    }

    #[test]
    fn parameter_range() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(lp_independence_check(&k3, 2.0, 5, 1e-8), Err(LpError::Exponent(2.0)));
        assert_eq!(lp_independence_check(&k3, 1.0, 5, 1e-8), Err(LpError::Exponent(1.0)));
        assert_eq!(lp_independence_check(&k3, 4.0, 2, 1e-8), Err(LpError::Trials(2)));
        assert!(lp_independence_check(&k3, 4.0, 3, 0.0).is_err());
    }
}
