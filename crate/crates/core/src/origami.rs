//! Polyhedral surfaces with rigid panels and their block-and-hole graphs.
//!
//! Triangular panels become T faces. Every other panel becomes a B face
//! carrying a minimally 3-rigid block; holes become H faces (or T faces when
//! triangular, since a triangle of bars is already rigid). The block choice
//! is a [`BlockStyle`].

use alloc::vec::Vec;

use num_rational::Ratio;

use crate::construct::{block_and_hole, BlockAndHoleGraph, BlockSpec};
use crate::facegraph::{Face, FaceGraph, FaceLabel};
use crate::graph::{SimpleGraph, VertexId};
use crate::{Error, Result};

pub type Rational = Ratio<i128>;
pub type Point = [Rational; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralSurface {
    pub points: Vec<Point>,
    pub faces: Vec<Vec<VertexId>>,
    pub holes: Vec<Vec<VertexId>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockStyle {
    /// Fan triangulation of the panel plus one apex joined to its boundary.
    #[default]
    Apex,
    /// Two fan-triangulated copies of the panel joined by a band of
    /// triangulated quadrilaterals.
    Prism,
    /// Two poles joined to the boundary.
    Discus,
}

impl BlockStyle {
    pub fn as_str(self) -> &'static str {
        match self {
            BlockStyle::Apex => "apex",
            BlockStyle::Prism => "prism",
            BlockStyle::Discus => "discus",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrigamiConversion {
    pub face_graph: FaceGraph,
    pub graph: BlockAndHoleGraph,
    /// Panels (indices into `faces`) with at least four vertices, all
    /// coplanar. Their blocks sit in non-generic position.
    pub coplanar_panels: Vec<usize>,
}

/// Cone over a fan-triangulated `k`-gon: boundary `0..k`, apex `k`.
pub fn apex_block(k: usize) -> SimpleGraph {
    let mut edges: Vec<(VertexId, VertexId)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((2..k - 1).map(|j| (0, j)));
    edges.extend((0..k).map(|i| (i, k)));
    SimpleGraph::from_edges(k + 1, edges).expect("apex block edges are distinct")
}

/// Triangulated prism over a `k`-gon: bottom `0..k`, top `k..2k`.
pub fn prism_block(k: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for offset in [0, k] {
        edges.extend((0..k).map(|i| (offset + i, offset + (i + 1) % k)));
        edges.extend((2..k - 1).map(|j| (offset, offset + j)));
    }
    for i in 0..k {
        edges.push((i, k + i));
        edges.push((i, k + (i + 1) % k));
    }
    SimpleGraph::from_edges(2 * k, edges).expect("prism block edges are distinct")
}

pub fn origami_to_block_and_hole(s: &PolyhedralSurface, style: BlockStyle) -> Result<OrigamiConversion> {
    let n = s.points.len();
    for cycle in s.faces.iter().chain(&s.holes) {
        if let Some(&v) = cycle.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, count: n });
        }
    }
    let mut faces = Vec::with_capacity(s.faces.len() + s.holes.len());
    for panel in &s.faces {
        let label = if panel.len() == 3 { FaceLabel::T } else { FaceLabel::B };
        faces.push(Face::new(label, panel.clone()));
    }
    for hole in &s.holes {
        let label = if hole.len() == 3 { FaceLabel::T } else { FaceLabel::H };
        faces.push(Face::new(label, hole.clone()));
    }
    let face_graph = FaceGraph::new_allow_degenerate(n, faces)?;
    let blocks = face_graph
        .block_faces()
        .iter()
        .map(|&f| {
            let k = face_graph.face(f).len();
            match style {
                BlockStyle::Apex => BlockSpec::Custom { graph: apex_block(k), boundary: (0..k).collect() },
                BlockStyle::Prism => BlockSpec::Custom { graph: prism_block(k), boundary: (0..k).collect() },
                BlockStyle::Discus => BlockSpec::Discus,
            }
        })
        .collect();
    let graph = block_and_hole(&face_graph, blocks)?;
    let coplanar_panels = (0..s.faces.len())
        .filter(|&i| s.faces[i].len() >= 4 && coplanar(&s.faces[i].iter().map(|&v| s.points[v]).collect::<Vec<_>>()))
        .collect();
    Ok(OrigamiConversion { face_graph, graph, coplanar_panels })
}

fn minus(a: &Point, b: &Point) -> Point {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: &Point, b: &Point) -> Point {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: &Point, b: &Point) -> Rational {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Whether all points lie on a common plane, in exact arithmetic.
pub fn coplanar(points: &[Point]) -> bool {
    let Some(p0) = points.first() else {
        return true;
    };
    let zero = Rational::from_integer(0);
    let mut normal = None;
    'outer: for i in 1..points.len() {
        for j in i + 1..points.len() {
            let nrm = cross(&minus(&points[i], p0), &minus(&points[j], p0));
            if nrm.iter().any(|x| *x != zero) {
                normal = Some(nrm);
                break 'outer;
            }
        }
    }
    match normal {
        None => true,
        Some(nrm) => points.iter().all(|p| dot(&minus(p, p0), &nrm) == zero),
    }
}
