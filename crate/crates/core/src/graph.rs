//! Multigraphs with self-loops and simple graphs.
//!
//! Loops are stored as pairs `(v, v)` in the same edge sequence as ordinary
//! edges, and an edge is identified by its position in that sequence. Parallel
//! edges and repeated loops are therefore distinct edges.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Dense vertex index, `0..vertex_count`.
pub type VertexId = usize;

/// Freedom number `3|V| - |E|` of a multigraph. Loops count as edges.
pub fn freedom(g: &Multigraph) -> i64 {
    g.freedom()
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
}

/// Result of [`Multigraph::induced_subgraph`]: the reindexed subgraph plus
/// the maps back to the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Multigraph,
    /// `original[i]` is the parent id of subgraph vertex `i`.
    pub original: Vec<VertexId>,
    /// `edge_origin[j]` is the parent index of subgraph edge `j`.
    pub edge_origin: Vec<usize>,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Multigraph { vertex_count, edges: Vec::new() }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Multigraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Appends an edge (a loop when `u == v`) and returns its index.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn add_loop(&mut self, v: VertexId) -> Result<usize> {
        self.add_edge(v, v)
    }

    /// Adds a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (VertexId, VertexId) {
        self.edges[index]
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    pub fn freedom(&self) -> i64 {
        3 * self.vertex_count as i64 - self.edges.len() as i64
    }

    /// Degree with loops counted once.
    pub fn incidence_count(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count })
        }
    }

    /// Subgraph spanned by `vs` together with every edge and loop having both
    /// endpoints in `vs`. Vertices are renumbered in increasing parent order.
    pub fn induced_subgraph(&self, vs: &[VertexId]) -> Result<InducedSubgraph> {
        let mut keep = vec![usize::MAX; self.vertex_count];
        let mut original: Vec<VertexId> = Vec::with_capacity(vs.len());
        for &v in vs {
            self.check_vertex(v)?;
            original.push(v);
        }
        original.sort_unstable();
        original.dedup();
        for (i, &v) in original.iter().enumerate() {
            keep[v] = i;
        }
        let mut graph = Multigraph::new(original.len());
        let mut edge_origin = Vec::new();
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            if keep[u] != usize::MAX && keep[v] != usize::MAX {
                graph.edges.push((keep[u], keep[v]));
                edge_origin.push(j);
            }
        }
        Ok(InducedSubgraph { graph, original, edge_origin })
    }

    /// Disjoint union; the vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Multigraph { vertex_count: shift + other.vertex_count, edges }
    }
}

/// A loopless multigraph without repeated pairs. Edges are stored with the
/// smaller endpoint first, in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct SimpleGraph {
    inner: Multigraph,
    adjacency: Vec<Vec<VertexId>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph { inner: Multigraph::new(vertex_count), adjacency: vec![Vec::new(); vertex_count] }
    }

    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = SimpleGraph::new(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Validates a multigraph as simple.
    pub fn try_from_multigraph(g: &Multigraph) -> Result<Self> {
        SimpleGraph::from_edges(g.vertex_count(), g.edges().iter().copied())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete graph edges are distinct");
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<usize> {
        if u == v || self.has_edge(u, v) {
            return Err(Error::NotSimple { u, v });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let idx = self.inner.add_edge(a, b)?;
        insert_sorted(&mut self.adjacency[a], b);
        insert_sorted(&mut self.adjacency[b], a);
        Ok(idx)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(Vec::new());
        self.inner.add_vertex()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.adjacency.len() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbour list.
    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        self.inner.edges()
    }

    pub fn freedom(&self) -> i64 {
        self.inner.freedom()
    }

    pub fn as_multigraph(&self) -> &Multigraph {
        &self.inner
    }

    pub fn into_multigraph(self) -> Multigraph {
        self.inner
    }

    /// The edge set as a sorted set of normalised pairs.
    pub fn edge_set(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.inner.edges().iter().copied().collect()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Result<Self> {
        if perm.len() != self.vertex_count() {
            return Err(Error::InvalidParameter("permutation length differs from vertex count"));
        }
        SimpleGraph::from_edges(self.vertex_count(), self.edges().iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// 3-dimensional vertex splitting.
    ///
    /// Vertex `v` is replaced by `v` and a new vertex `w = vertex_count`. Both
    /// are joined to `v1`, `v2` and to each other; the remaining neighbours of
    /// `v` listed in `stay` remain on `v`, all others move to `w`. The result
    /// has one more vertex and three more edges, so the freedom number is
    /// unchanged.
    pub fn vertex_split(&self, v: VertexId, v1: VertexId, v2: VertexId, stay: &[VertexId]) -> Result<SimpleGraph> {
        let n = self.vertex_count();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, count: n });
        }
        for &x in &[v1, v2] {
            if !self.has_edge(v, x) {
                return Err(Error::NotAdjacent { v, w: x });
            }
        }
        if v1 == v2 {
            return Err(Error::InvalidPartition);
        }
        let stay_set: BTreeSet<VertexId> = stay.iter().copied().collect();
        if stay_set.len() != stay.len() || stay_set.iter().any(|&x| x == v1 || x == v2 || !self.has_edge(v, x)) {
            return Err(Error::InvalidPartition);
        }
        let w = n;
        let mut out = SimpleGraph::new(n + 1);
        for &(a, b) in self.edges() {
            if a != v && b != v {
                out.add_edge(a, b)?;
            }
        }
        for &x in self.neighbours(v) {
            if x == v1 || x == v2 {
                out.add_edge(v, x)?;
                out.add_edge(w, x)?;
            } else if stay_set.contains(&x) {
                out.add_edge(v, x)?;
            } else {
                out.add_edge(w, x)?;
            }
        }
        out.add_edge(v, w)?;
        debug_assert_eq!(out.freedom(), self.freedom());
        Ok(out)
    }
}

fn insert_sorted(list: &mut Vec<VertexId>, x: VertexId) {
    if let Err(pos) = list.binary_search(&x) {
        list.insert(pos, x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn freedom_counts() {
        let k3 = SimpleGraph::complete(3);
        assert_eq!(k3.freedom(), 6);
        let mut loops = Multigraph::new(1);
        for _ in 0..3 {
            loops.add_loop(0).unwrap();
        }
        assert_eq!(freedom(&loops), 0);
        assert_eq!(Multigraph::new(0).freedom(), 0);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = SimpleGraph::complete(4);
        let sub = k4.as_multigraph().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.graph.vertex_count(), 3);
        assert_eq!(sub.graph.edge_count(), 3);
        assert_eq!(sub.original, vec![0, 1, 2]);

        let empty = k4.as_multigraph().induced_subgraph(&[]).unwrap();
        assert_eq!(empty.graph.vertex_count(), 0);
        assert_eq!(empty.graph.edge_count(), 0);

        let mut g = Multigraph::new(2);
        for _ in 0..3 {
            g.add_loop(1).unwrap();
        }
        let sub = g.induced_subgraph(&[1]).unwrap();
        assert_eq!(sub.graph.edges(), &[(0, 0), (0, 0), (0, 0)]);
        assert_eq!(sub.edge_origin, vec![0, 1, 2]);

        assert_eq!(g.induced_subgraph(&[2]).unwrap_err(), Error::VertexOutOfRange { vertex: 2, count: 2 });
    }

    #[test]
    fn simple_graph_rejects_loops_and_repeats() {
        assert!(SimpleGraph::from_edges(2, [(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn split_of_triangle_is_k4() {
        let k3 = SimpleGraph::complete(3);
        let k4 = k3.vertex_split(0, 1, 2, &[]).unwrap();
        assert_eq!(k4.edge_set(), SimpleGraph::complete(4).edge_set());
    }

    #[test]
    fn split_errors() {
        let mut path = SimpleGraph::new(4);
        path.add_edge(0, 1).unwrap();
        path.add_edge(1, 2).unwrap();
        path.add_edge(1, 3).unwrap();
        assert_eq!(path.vertex_split(1, 0, 3, &[0]).unwrap_err(), Error::InvalidPartition);
        assert_eq!(path.vertex_split(0, 1, 2, &[]).unwrap_err(), Error::NotAdjacent { v: 0, w: 2 });
        let split = path.vertex_split(1, 0, 2, &[3]).unwrap();
        assert_eq!(split.vertex_count(), 5);
        assert_eq!(split.edge_count(), 6);
        assert!(split.has_edge(1, 3) && !split.has_edge(4, 3));
    }

    #[test]
    fn disjoint_union_adds_freedom() {
        let a = SimpleGraph::complete(4).into_multigraph();
        let mut b = Multigraph::new(2);
        b.add_loop(0).unwrap();
        b.add_edge(0, 1).unwrap();
        assert_eq!(a.disjoint_union(&b).freedom(), a.freedom() + b.freedom());
    }
}
