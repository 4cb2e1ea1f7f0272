//! The `(k,l)` pebble game on multigraphs with loops.
//!
//! Every vertex starts with `k` pebbles. An accepted edge consumes one pebble
//! from an endpoint and is oriented out of that endpoint, so
//! `pebbles(v) + outdegree(v) = k` throughout. A plain edge `uv` is accepted
//! once `l + 1` pebbles sit on `{u, v}`; a loop at `v` once `l + 1` sit on `v`.
//! Pebbles are moved by reversing directed paths that end at a free pebble.

use alloc::vec;
use alloc::vec::Vec;

use crate::construct::{looped_2sigma, looped_3sigma_minus};
use crate::facegraph::FaceGraph;
use crate::graph::{Multigraph, VertexId};
use crate::{Error, Result};

/// Tail vertex of every edge, indexed like the graph's edge sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    tails: Vec<VertexId>,
}

impl Orientation {
    pub fn new(tails: Vec<VertexId>) -> Self {
        Self { tails }
    }

    pub fn tails(&self) -> &[VertexId] {
        &self.tails
    }

    pub fn tail(&self, edge: usize) -> VertexId {
        self.tails[edge]
    }

    pub fn len(&self) -> usize {
        self.tails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tails.is_empty()
    }

    /// Outdegree of every vertex of `g`. Loops count once at their vertex.
    pub fn outdegrees(&self, g: &Multigraph) -> Vec<usize> {
        let mut out = vec![0; g.vertex_count()];
        for &t in &self.tails {
            if t < out.len() {
                out[t] += 1;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PebbleVerdict {
    /// All edges accepted and exactly `l` pebbles remain.
    Tight(Orientation),
    /// All edges accepted with `free_pebbles > l` left over.
    Sparse { free_pebbles: usize, orientation: Orientation },
    /// `edge` could not be accepted; `vertices` spans a subgraph which,
    /// together with `edge`, has fewer than `l` degrees of freedom.
    NotSparse { edge: usize, vertices: Vec<VertexId> },
}

impl PebbleVerdict {
    pub fn is_tight(&self) -> bool {
        matches!(self, PebbleVerdict::Tight(_))
    }

    pub fn is_sparse(&self) -> bool {
        !matches!(self, PebbleVerdict::NotSparse { .. })
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            PebbleVerdict::Tight(o) | PebbleVerdict::Sparse { orientation: o, .. } => Some(o),
            PebbleVerdict::NotSparse { .. } => None,
        }
    }
}

/// Plays the `(k,l)` pebble game, inserting edges in sequence order.
pub fn pebble_game(g: &Multigraph, k: usize, l: usize) -> Result<PebbleVerdict> {
    pebble_game_in_order(g, k, l, &(0..g.edge_count()).collect::<Vec<_>>())
}

/// As [`pebble_game`], inserting edges in the given order. `order` must be a
/// permutation of the edge indices.
pub fn pebble_game_in_order(g: &Multigraph, k: usize, l: usize, order: &[usize]) -> Result<PebbleVerdict> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive"));
    }
    if l >= 2 * k {
        return Err(Error::InvalidParameter("l must satisfy 0 <= l <= 2k-1"));
    }
    let mut seen = vec![false; g.edge_count()];
    if order.len() != g.edge_count() || order.iter().any(|&e| e >= seen.len() || core::mem::replace(&mut seen[e], true))
    {
        return Err(Error::InvalidParameter("insertion order must be a permutation of the edges"));
    }
    let mut state = PebbleState::new(g, k);
    for &e in order {
        if !state.insert(e, l) {
            let (u, v) = g.edge(e);
            return Ok(PebbleVerdict::NotSparse { edge: e, vertices: state.reachable(&[u, v]) });
        }
    }
    let free: usize = state.pebbles.iter().sum();
    let orientation = Orientation::new(state.tails.iter().map(|t| t.expect("every edge accepted")).collect());
    Ok(if free == l {
        PebbleVerdict::Tight(orientation)
    } else {
        PebbleVerdict::Sparse { free_pebbles: free, orientation }
    })
}

struct PebbleState<'a> {
    g: &'a Multigraph,
    k: usize,
    pebbles: Vec<usize>,
    tails: Vec<Option<VertexId>>,
    out: Vec<Vec<usize>>,
}

impl<'a> PebbleState<'a> {
    fn new(g: &'a Multigraph, k: usize) -> Self {
        let n = g.vertex_count();
        Self { g, k, pebbles: vec![k; n], tails: vec![None; g.edge_count()], out: vec![Vec::new(); n] }
    }

    fn head(&self, e: usize) -> VertexId {
        let (u, v) = self.g.edge(e);
        if self.tails[e] == Some(u) {
            v
        } else {
            u
        }
    }

    fn insert(&mut self, e: usize, l: usize) -> bool {
        let (u, v) = self.g.edge(e);
        if u == v {
            while self.pebbles[u] < l + 1 {
                if !self.gather(u, None) {
                    return false;
                }
            }
            self.accept(e, u);
            return true;
        }
        while self.pebbles[u] + self.pebbles[v] < l + 1 {
            let moved = (self.pebbles[u] < self.k && self.gather(u, Some(v)))
                || (self.pebbles[v] < self.k && self.gather(v, Some(u)));
            if !moved {
                return false;
            }
        }
        let tail = if self.pebbles[u] > 0 { u } else { v };
        self.accept(e, tail);
        true
    }

    fn accept(&mut self, e: usize, tail: VertexId) {
        self.pebbles[tail] -= 1;
        self.tails[e] = Some(tail);
        self.out[tail].push(e);
        debug_assert!(self.invariant_holds());
    }

    /// Moves one free pebble to `root` along a reversed directed path that
    /// avoids `blocked`.
    fn gather(&mut self, root: VertexId, blocked: Option<VertexId>) -> bool {
        let n = self.pebbles.len();
        let mut parent_edge: Vec<Option<usize>> = vec![None; n];
        let mut visited = vec![false; n];
        visited[root] = true;
        if let Some(b) = blocked {
            visited[b] = true;
        }
        let mut stack = vec![root];
        let mut found = None;
        'search: while let Some(x) = stack.pop() {
            for &e in &self.out[x] {
                let y = self.head(e);
                if visited[y] {
                    continue;
                }
                visited[y] = true;
                parent_edge[y] = Some(e);
                if self.pebbles[y] > 0 {
                    found = Some(y);
                    break 'search;
                }
                stack.push(y);
            }
        }
        let Some(target) = found else {
            return false;
        };
        let mut y = target;
        while y != root {
            let e = parent_edge[y].expect("path leads back to the root");
            let x = self.tails[e].expect("edge on path is oriented");
            self.out[x].retain(|&f| f != e);
            self.out[y].push(e);
            self.tails[e] = Some(y);
            y = x;
        }
        self.pebbles[target] -= 1;
        self.pebbles[root] += 1;
        debug_assert!(self.invariant_holds());
        true
    }

    fn reachable(&self, from: &[VertexId]) -> Vec<VertexId> {
        let mut visited = vec![false; self.pebbles.len()];
        let mut stack: Vec<VertexId> = Vec::new();
        for &v in from {
            if !visited[v] {
                visited[v] = true;
                stack.push(v);
            }
        }
        while let Some(x) = stack.pop() {
            for &e in &self.out[x] {
                let y = self.head(e);
                if !visited[y] {
                    visited[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..visited.len()).filter(|&v| visited[v]).collect()
    }

    fn invariant_holds(&self) -> bool {
        (0..self.pebbles.len()).all(|v| self.pebbles[v] + self.out[v].len() == self.k)
    }
}

/// How [`verify_orientation`] compares outdegrees with `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutdegreeBound {
    Exactly,
    AtMost,
}

/// Checks that every tail is an endpoint of its edge and that every vertex
/// has outdegree `k` (or at most `k`).
pub fn verify_orientation(g: &Multigraph, o: &Orientation, k: usize, bound: OutdegreeBound) -> Result<bool> {
    if o.len() != g.edge_count() {
        return Err(Error::OrientationLength { expected: g.edge_count(), found: o.len() });
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let t = o.tail(i);
        if t != u && t != v {
            return Ok(false);
        }
    }
    let out = o.outdegrees(g);
    Ok(match bound {
        OutdegreeBound::Exactly => out.iter().all(|&d| d == k),
        OutdegreeBound::AtMost => out.iter().all(|&d| d <= k),
    })
}

/// Converts an outdegree-3 orientation of `G^{2σ}` into one of `(G^-)^{3σ}`.
///
/// In any such orientation the boundary of `B` is a directed cycle, so its
/// vertices have no outgoing interior edges; those edges keep their tails
/// and every loop points out of its own vertex.
pub fn boundary_orientation_transfer(g: &FaceGraph, o2sigma: &Orientation) -> Result<Orientation> {
    let two = looped_2sigma(g)?;
    if !verify_orientation(&two, o2sigma, 3, OutdegreeBound::Exactly)? {
        return Err(Error::InvalidOrientation { k: 3 });
    }
    let boundary = g.block_boundary()?;
    let mut on_boundary = vec![false; g.vertex_count()];
    for &v in boundary {
        on_boundary[v] = true;
    }
    let mut boundary_out = vec![0usize; g.vertex_count()];
    let mut tails = Vec::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if g.is_block_boundary_edge(u, v) {
            boundary_out[o2sigma.tail(i)] += 1;
        } else {
            tails.push(o2sigma.tail(i));
        }
    }
    if boundary.iter().any(|&v| boundary_out[v] != 1) {
        return Err(Error::Internal("boundary of B is not cyclically oriented".into()));
    }
    for &v in boundary {
        tails.extend([v, v, v]);
    }
    let o3 = Orientation::new(tails);
    debug_assert!(verify_orientation(&looped_3sigma_minus(g)?, &o3, 3, OutdegreeBound::Exactly)?);
    Ok(o3)
}

/// Inverse of [`boundary_orientation_transfer`]: the boundary of `B` is
/// oriented along the stored face order.
pub fn boundary_orientation_transfer_inverse(g: &FaceGraph, o3sigma: &Orientation) -> Result<Orientation> {
    let three = looped_3sigma_minus(g)?;
    if !verify_orientation(&three, o3sigma, 3, OutdegreeBound::Exactly)? {
        return Err(Error::InvalidOrientation { k: 3 });
    }
    let boundary = g.block_boundary()?;
    let mut tails = Vec::new();
    let mut interior = o3sigma.tails().iter();
    for &(u, v) in g.edges() {
        if g.is_block_boundary_edge(u, v) {
            let k = boundary.len();
            let i = boundary.iter().position(|&x| x == u).expect("boundary edge endpoint");
            tails.push(if boundary[(i + 1) % k] == v { u } else { v });
        } else {
            tails.push(*interior.next().expect("interior edges precede loops"));
        }
    }
    for &v in boundary {
        tails.extend([v, v]);
    }
    let o2 = Orientation::new(tails);
    if !verify_orientation(&looped_2sigma(g)?, &o2, 3, OutdegreeBound::Exactly)? {
        return Err(Error::Internal("interior edge leaves the boundary of B".into()));
    }
    Ok(o2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loops(count: usize) -> Multigraph {
        let mut g = Multigraph::new(1);
        for _ in 0..count {
            g.add_loop(0).unwrap();
        }
        g
    }

    #[test]
    fn three_loops_are_tight() {
        let v = pebble_game(&loops(3), 3, 0).unwrap();
        assert_eq!(v, PebbleVerdict::Tight(Orientation::new(vec![0, 0, 0])));
    }

    #[test]
    fn fourth_loop_is_rejected() {
        let v = pebble_game(&loops(4), 3, 0).unwrap();
        assert_eq!(v, PebbleVerdict::NotSparse { edge: 3, vertices: vec![0] });
    }

    #[test]
    fn parameter_range() {
        assert!(pebble_game(&loops(1), 3, 6).is_err());
        assert!(pebble_game(&loops(1), 0, 0).is_err());
        assert!(pebble_game(&loops(1), 3, 5).is_ok());
    }

    #[test]
    fn k4_is_36_count_sparse_as_32_game() {
        // K4 has 6 edges on 4 vertices: (3,5)-sparse with 6 free pebbles.
        let k4 = crate::SimpleGraph::complete(4).into_multigraph();
        match pebble_game(&k4, 3, 5).unwrap() {
            PebbleVerdict::Sparse { free_pebbles, orientation } => {
                assert_eq!(free_pebbles, 6);
                assert!(verify_orientation(&k4, &orientation, 3, OutdegreeBound::AtMost).unwrap());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn witness_spans_a_dense_subgraph() {
        // Two vertices with three parallel edges and two loops each: 8 edges > 6.
        let mut g = Multigraph::new(3);
        for _ in 0..3 {
            g.add_edge(0, 1).unwrap();
        }
        for v in [0, 1] {
            g.add_loop(v).unwrap();
            g.add_loop(v).unwrap();
        }
        g.add_edge(1, 2).unwrap();
        match pebble_game(&g, 3, 0).unwrap() {
            PebbleVerdict::NotSparse { vertices, edge } => {
                assert_eq!(vertices, vec![0, 1]);
                assert_eq!(edge, 6);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn verify_orientation_modes() {
        let g = Multigraph::new(0);
        let empty = Orientation::new(Vec::new());
        assert!(verify_orientation(&g, &empty, 3, OutdegreeBound::AtMost).unwrap());
        let g = loops(2);
        assert!(verify_orientation(&g, &Orientation::new(vec![0]), 3, OutdegreeBound::AtMost).is_err());
        assert!(!verify_orientation(&g, &Orientation::new(vec![0, 0]), 3, OutdegreeBound::Exactly).unwrap());
    }
}
