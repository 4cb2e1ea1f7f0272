//! Discus, discus-and-hole and block-and-hole graphs, and the looped face
//! graphs `G^{2σ}` and `(G^-)^{3σ}`.
//!
//! Vertex ids of a face graph are kept unchanged in every derived graph.
//! Extra vertices (poles, block interiors) get ids above them, block by block
//! in the order of the B faces.

use alloc::vec::Vec;

use crate::facegraph::FaceGraph;
use crate::graph::{Multigraph, SimpleGraph, VertexId};
use crate::numeric::is_minimally_3_rigid_numeric;
use crate::{Error, Result};

/// The simplicial discus on a `k`-cycle: cycle `0..k`, poles `k` and `k+1`.
pub fn discus(k: usize) -> Result<SimpleGraph> {
    if k < 3 {
        return Err(Error::InvalidParameter("a discus needs a boundary of length at least 3"));
    }
    let mut edges: Vec<(VertexId, VertexId)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    for v in 0..k {
        edges.push((v, k));
        edges.push((v, k + 1));
    }
    SimpleGraph::from_edges(k + 2, edges)
}

/// `G†` together with the poles glued on each B face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscusAndHole {
    pub graph: SimpleGraph,
    /// Poles of the discus on the `i`-th B face (in face order).
    pub poles: Vec<[VertexId; 2]>,
}

/// `G†`: a discus glued on the boundary of every B face.
pub fn discus_and_hole(g: &FaceGraph) -> SimpleGraph {
    discus_and_hole_with_poles(g).graph
}

pub fn discus_and_hole_with_poles(g: &FaceGraph) -> DiscusAndHole {
    let n = g.vertex_count();
    let blocks = g.block_faces();
    let mut graph = g.graph().clone();
    let mut poles = Vec::with_capacity(blocks.len());
    for (i, &f) in blocks.iter().enumerate() {
        let (p, q) = (n + 2 * i, n + 2 * i + 1);
        assert_eq!(graph.add_vertex(), p);
        assert_eq!(graph.add_vertex(), q);
        for &v in &g.face(f).vertices {
            graph.add_edge(v, p).expect("fresh pole edge");
            graph.add_edge(v, q).expect("fresh pole edge");
        }
        poles.push([p, q]);
    }
    debug_assert_eq!(
        graph.freedom(),
        g.freedom() - blocks.iter().map(|&f| 2 * g.face(f).len() as i64 - 6).sum::<i64>()
    );
    DiscusAndHole { graph, poles }
}

/// The minimally 3-rigid graph attached to a B face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockSpec {
    Discus,
    /// `boundary[j]` is the block vertex glued to the `j`-th vertex of the B
    /// face, in the face's stored order.
    Custom {
        graph: SimpleGraph,
        boundary: Vec<VertexId>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockAndHoleGraph {
    pub base: FaceGraph,
    pub blocks: Vec<BlockSpec>,
    pub realized: SimpleGraph,
    /// Realized ids of the vertices each block adds beyond its boundary.
    pub auxiliary: Vec<Vec<VertexId>>,
}

/// Glues one block per B face onto `g`. Custom blocks must contain their
/// boundary cycle, meet `g` only in it, and be minimally 3-rigid by the exact
/// rank oracle.
pub fn block_and_hole(g: &FaceGraph, blocks: Vec<BlockSpec>) -> Result<BlockAndHoleGraph> {
    let faces = g.block_faces();
    if faces.len() != blocks.len() {
        return Err(Error::BlockCount { expected: blocks.len(), found: faces.len() });
    }
    let mut realized = g.graph().clone();
    let mut auxiliary = Vec::with_capacity(blocks.len());
    for (&f, block) in faces.iter().zip(&blocks) {
        let cycle = &g.face(f).vertices;
        let k = cycle.len();
        match block {
            BlockSpec::Discus => {
                let (p, q) = (realized.add_vertex(), realized.add_vertex());
                for &v in cycle {
                    realized.add_edge(v, p)?;
                    realized.add_edge(v, q)?;
                }
                auxiliary.push(alloc::vec![p, q]);
            }
            BlockSpec::Custom { graph, boundary } => {
                let bn = graph.vertex_count();
                if boundary.len() != k || boundary.iter().any(|&b| b >= bn) {
                    return Err(Error::BlockBoundaryMismatch);
                }
                let mut distinct = boundary.clone();
                distinct.sort_unstable();
                distinct.dedup();
                if distinct.len() != k {
                    return Err(Error::BlockBoundaryMismatch);
                }
                for j in 0..k {
                    if !graph.has_edge(boundary[j], boundary[(j + 1) % k]) {
                        return Err(Error::BlockBoundaryMismatch);
                    }
                }
                if !is_minimally_3_rigid_numeric(graph)? {
                    return Err(Error::BlockNotMinimallyRigid);
                }
                let mut map = alloc::vec![usize::MAX; bn];
                for (j, &b) in boundary.iter().enumerate() {
                    map[b] = cycle[j];
                }
                let mut extra = Vec::new();
                for slot in map.iter_mut() {
                    if *slot == usize::MAX {
                        *slot = realized.add_vertex();
                        extra.push(*slot);
                    }
                }
                for &(a, b) in graph.edges() {
                    let (x, y) = (map[a], map[b]);
                    let on_cycle = (0..k).any(|j| {
                        let (c, d) = (cycle[j], cycle[(j + 1) % k]);
                        (c, d) == (x, y) || (d, c) == (x, y)
                    });
                    if on_cycle {
                        continue;
                    }
                    if g.graph().has_edge(x, y) {
                        return Err(Error::BlockBoundaryMismatch);
                    }
                    if !realized.has_edge(x, y) {
                        realized.add_edge(x, y)?;
                    }
                }
                auxiliary.push(extra);
            }
        }
    }
    Ok(BlockAndHoleGraph { base: g.clone(), blocks, realized, auxiliary })
}

/// `G^{2σ}`: the edges of `G` in sorted order, then two loops at each vertex
/// of `∂B` in boundary order.
pub fn looped_2sigma(g: &FaceGraph) -> Result<Multigraph> {
    let boundary = g.block_boundary()?;
    let mut m = g.graph().as_multigraph().clone();
    for &v in boundary {
        m.add_loop(v)?;
        m.add_loop(v)?;
    }
    Ok(m)
}

/// `(G^-)^{3σ}`: the edges of `G` not on `∂B` in sorted order, then three
/// loops at each vertex of `∂B` in boundary order.
pub fn looped_3sigma_minus(g: &FaceGraph) -> Result<Multigraph> {
    let boundary = g.block_boundary()?;
    let mut m = Multigraph::new(g.vertex_count());
    for &(u, v) in g.edges() {
        if !g.is_block_boundary_edge(u, v) {
            m.add_edge(u, v)?;
        }
    }
    for &v in boundary {
        for _ in 0..3 {
            m.add_loop(v)?;
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facegraph::fixtures::*;
    use crate::numeric::euclidean_rigidity_rank;
    use crate::oracle::check_36;

    #[test]
    fn discus_counts() {
        for (k, v, e) in [(3, 5, 9), (4, 6, 12), (6, 8, 18)] {
            let d = discus(k).unwrap();
            assert_eq!((d.vertex_count(), d.edge_count(), d.freedom()), (v, e, 6));
            assert!(!d.has_edge(k, k + 1));
            assert_eq!(d.degree(k), k);
        }
        assert!(discus(2).is_err());
        assert_eq!(euclidean_rigidity_rank(&discus(6).unwrap(), 3).unwrap().rank, 18);
    }

    #[test]
    fn tetrahedron_dagger_is_itself() {
        let g = tetrahedron();
        assert_eq!(&discus_and_hole(&g), g.graph());
    }

    #[test]
    fn hexagon_three_quads_dagger() {
        let g = hexagon_three_quads();
        let d = discus_and_hole_with_poles(&g);
        assert_eq!((d.graph.vertex_count(), d.graph.edge_count(), d.graph.freedom()), (11, 27, 6));
        assert_eq!(d.poles, vec![[9, 10]]);
        assert!(check_36(&d.graph).unwrap().tight);
    }

    #[test]
    fn looped_graphs_of_hexagon_three_quads() {
        let g = hexagon_three_quads();
        let two = looped_2sigma(&g).unwrap();
        assert_eq!((two.vertex_count(), two.edge_count(), two.loop_count(), two.freedom()), (9, 27, 12, 0));
        let three = looped_3sigma_minus(&g).unwrap();
        assert_eq!((three.edge_count(), three.loop_count(), three.freedom()), (27, 18, 0));
        assert_eq!(discus_and_hole(&g).freedom(), 6 + two.freedom());
    }

    #[test]
    fn hexagon_one_quad_dagger_freedom() {
        assert_eq!(discus_and_hole(&hexagon_one_quad()).freedom(), 4);
    }

    fn square_block_face_graph() -> FaceGraph {
        fg(
            7,
            &[
                ('B', &[0, 1, 2, 3]),
                ('H', &[1, 0, 4, 5, 6]),
                ('T', &[0, 3, 4]),
                ('T', &[3, 2, 5]),
                ('T', &[3, 5, 4]),
                ('T', &[2, 1, 6]),
                ('T', &[2, 6, 5]),
            ],
        )
    }

    #[test]
    fn discus_blocks_match_discus_and_hole() {
        let g = hexagon_three_quads();
        let b = block_and_hole(&g, vec![BlockSpec::Discus]).unwrap();
        assert_eq!(b.realized, discus_and_hole(&g));
        assert_eq!(b.auxiliary, vec![vec![9, 10]]);
    }

    #[test]
    fn octahedron_block_on_a_square() {
        let g = square_block_face_graph();
        // Octahedron with equator 1 2 3 4 and poles 0, 5.
        let oct = octahedron().graph().clone();
        let b = block_and_hole(&g, vec![BlockSpec::Custom { graph: oct, boundary: vec![1, 2, 3, 4] }]).unwrap();
        assert_eq!(b.realized.vertex_count(), 9);
        assert_eq!(b.realized.edge_count(), g.edge_count() + 8);
    }

    #[test]
    fn four_cycle_is_not_a_block() {
        let g = square_block_face_graph();
        let c4 = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let err = block_and_hole(&g, vec![BlockSpec::Custom { graph: c4, boundary: vec![0, 1, 2, 3] }]).unwrap_err();
        assert_eq!(err, Error::BlockNotMinimallyRigid);
        let k4 = SimpleGraph::complete(4);
        assert!(block_and_hole(&g, vec![BlockSpec::Custom { graph: k4, boundary: vec![0, 1, 2, 3] }]).is_ok());
        let k4 = SimpleGraph::complete(4);
        let missing = block_and_hole(&g, vec![BlockSpec::Custom { graph: k4, boundary: vec![0, 1, 2] }]);
        assert_eq!(missing.unwrap_err(), Error::BlockBoundaryMismatch);
    }

    #[test]
    fn looped_graphs_need_one_block() {
        assert!(looped_2sigma(&tetrahedron()).is_err());
        assert!(looped_3sigma_minus(&tetrahedron()).is_err());
    }
}
