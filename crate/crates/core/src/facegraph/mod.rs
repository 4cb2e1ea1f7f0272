//! Face graphs: sphere embeddings given by labelled face lists.
//!
//! A face is a cyclic vertex list labelled `T` (triangle), `B` (block) or `H`
//! (hole). The face lists are authoritative; edges, edge-face incidences and
//! rotations are derived from them. Faces are stored with a consistent
//! orientation, fixed by the first face as given.

mod contract;
mod cycles;
mod reduce;

pub use contract::{
    admissible_tt_edges, contract_bh, contract_sphere, contract_tt, contractible_bh_edges, is_admissible_tt,
    is_bh_reduced, is_contractible_tt, is_indivisible, is_terminal,
};
pub use cycles::{
    cycle_sides, enumerate_critical_separating_cycles, enumerate_critical_separating_cycles_with, ext_dagger,
    external_face_graph, is_critical_separating, simple_cycles, split_at_cycle, CriticalityOracle, CycleInG,
    CycleSearch, CycleSplit, DEFAULT_CYCLE_CAP, DEFAULT_CYCLE_VERTEX_BOUND,
};
pub use reduce::{reduce_to_k3, replay, verify_certificate, Move, MoveKind, ReductionCertificate};

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{SimpleGraph, VertexId};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceLabel {
    T,
    B,
    H,
}

impl FaceLabel {
    pub fn as_char(self) -> char {
        match self {
            FaceLabel::T => 'T',
            FaceLabel::B => 'B',
            FaceLabel::H => 'H',
        }
    }
}

impl fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    pub label: FaceLabel,
    pub vertices: Vec<VertexId>,
}

impl Face {
    pub fn new(label: FaceLabel, vertices: Vec<VertexId>) -> Self {
        Self { label, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Boundary edges as `(min, max)` pairs in cyclic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| ordered(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let k = self.vertices.len();
        (0..k).any(|i| {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }
}

/// Unordered label pair of the two faces at an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    BH,
    TT,
    BT,
    HT,
    HH,
    BB,
}

impl EdgeClass {
    pub fn from_labels(a: FaceLabel, b: FaceLabel) -> Self {
        use FaceLabel::*;
        match (a.min(b), a.max(b)) {
            (T, T) => EdgeClass::TT,
            (T, B) => EdgeClass::BT,
            (T, H) => EdgeClass::HT,
            (B, B) => EdgeClass::BB,
            (B, H) => EdgeClass::BH,
            (H, H) => EdgeClass::HH,
            _ => unreachable!("min and max are ordered"),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeClass::BH => "BH",
            EdgeClass::TT => "TT",
            EdgeClass::BT => "BT",
            EdgeClass::HT => "HT",
            EdgeClass::HH => "HH",
            EdgeClass::BB => "BB",
        }
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Number of B faces, number of H faces, and whether `G†` is `(3,6)`-tight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GClass {
    pub m: usize,
    pub n: usize,
    pub tight: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceGraph {
    vertex_count: usize,
    faces: Vec<Face>,
    graph: SimpleGraph,
    edge_faces: Vec<[usize; 2]>,
}

pub(crate) fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl FaceGraph {
    /// Validates a sphere embedding. Face orientations are made consistent.
    pub fn new(vertex_count: usize, faces: Vec<Face>) -> Result<Self> {
        Self::build(vertex_count, faces, false)
    }

    /// As [`FaceGraph::new`] but accepts a bare cycle with two
    /// non-triangular faces, which arises as the exterior of `∂B`.
    pub(crate) fn new_allow_degenerate(vertex_count: usize, faces: Vec<Face>) -> Result<Self> {
        Self::build(vertex_count, faces, true)
    }

    fn build(n: usize, mut faces: Vec<Face>, allow_degenerate: bool) -> Result<Self> {
        let mut used = vec![false; n];
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::FaceTooShort { face: fi });
            }
            let mut seen = BTreeMap::new();
            for &v in &face.vertices {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, count: n });
                }
                if seen.insert(v, ()).is_some() {
                    return Err(Error::NonSimpleBoundary { face: fi });
                }
                used[v] = true;
            }
            match (face.label, face.len()) {
                (FaceLabel::T, 3) => {}
                (FaceLabel::T, _) => return Err(Error::UnlabelledPolygon { face: fi }),
                (_, 3) => return Err(Error::LabelledTriangle { face: fi }),
                _ => {}
            }
        }
        if let Some(v) = used.iter().position(|&u| !u) {
            return Err(Error::UnusedVertex { vertex: v });
        }

        // For each edge, the faces through it and whether they run min -> max.
        let mut incidences: BTreeMap<(VertexId, VertexId), Vec<(usize, bool)>> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            let k = face.len();
            for i in 0..k {
                let (a, b) = (face.vertices[i], face.vertices[(i + 1) % k]);
                incidences.entry(ordered(a, b)).or_default().push((fi, a < b));
            }
        }
        let characteristic = n as i64 - incidences.len() as i64 + faces.len() as i64;
        if characteristic != 2 {
            return Err(Error::EulerViolation { characteristic });
        }
        for (&(u, v), inc) in &incidences {
            if inc.len() != 2 {
                return Err(Error::EdgeFaceCount { u, v, count: inc.len() });
            }
        }
        let graph = SimpleGraph::from_edges(n, incidences.keys().copied())?;
        if !is_connected(&graph) {
            return Err(Error::Disconnected);
        }
        for v in 0..n {
            if !link_is_cycle(&faces, v, &graph) {
                return Err(Error::NotManifold { vertex: v });
            }
        }

        // Consistent orientation: two faces sharing an edge traverse it in
        // opposite directions.
        let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
        let mut face_edges: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); faces.len()];
        for (&e, inc) in &incidences {
            for &(fi, _) in inc {
                face_edges[fi].push(e);
            }
        }
        for start in 0..faces.len() {
            if flip[start].is_some() {
                continue;
            }
            flip[start] = Some(false);
            let mut queue = vec![start];
            while let Some(f) = queue.pop() {
                for e in &face_edges[f] {
                    let inc = &incidences[e];
                    let (mine, other) = if inc[0].0 == f { (inc[0], inc[1]) } else { (inc[1], inc[0]) };
                    let my_dir = mine.1 ^ flip[f].expect("visited");
                    let wanted = !my_dir ^ other.1;
                    match flip[other.0] {
                        None => {
                            flip[other.0] = Some(wanted);
                            queue.push(other.0);
                        }
                        Some(x) if x != wanted => return Err(Error::NonOrientable),
                        Some(_) => {}
                    }
                }
            }
        }
        for (face, f) in faces.iter_mut().zip(&flip) {
            if f == &Some(true) {
                face.vertices[1..].reverse();
            }
        }

        if !allow_degenerate && faces.len() == 2 && faces.iter().all(|f| f.len() >= 4) {
            return Err(Error::DegenerateEmbedding);
        }
        let edge_faces = incidences.values().map(|inc| [inc[0].0, inc[1].0]).collect();
        Ok(FaceGraph { vertex_count: n, faces, graph, edge_faces })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    /// Edges as `(min, max)` pairs in sorted order; an edge's index is its
    /// position here.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        self.graph.edges()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.edges().binary_search(&ordered(u, v)).ok()
    }

    /// The two faces incident to edge `e`.
    pub fn edge_faces(&self, e: usize) -> [usize; 2] {
        self.edge_faces[e]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        self.graph.neighbours(v)
    }

    pub fn common_neighbours(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let nv = self.neighbours(v);
        self.neighbours(u).iter().copied().filter(|w| nv.binary_search(w).is_ok()).collect()
    }

    pub fn freedom(&self) -> i64 {
        self.graph.freedom()
    }

    pub fn faces_with_label(&self, label: FaceLabel) -> Vec<usize> {
        (0..self.faces.len()).filter(|&i| self.faces[i].label == label).collect()
    }

    pub fn block_faces(&self) -> Vec<usize> {
        self.faces_with_label(FaceLabel::B)
    }

    pub fn hole_faces(&self) -> Vec<usize> {
        self.faces_with_label(FaceLabel::H)
    }

    pub fn block_count(&self) -> usize {
        self.faces.iter().filter(|f| f.label == FaceLabel::B).count()
    }

    pub fn hole_count(&self) -> usize {
        self.faces.iter().filter(|f| f.label == FaceLabel::H).count()
    }

    /// `(m, n)`: the number of B faces and of H faces.
    pub fn class(&self) -> (usize, usize) {
        (self.block_count(), self.hole_count())
    }

    /// A triangulated sphere: no B and no H faces.
    pub fn is_sphere(&self) -> bool {
        self.faces.iter().all(|f| f.label == FaceLabel::T)
    }

    /// Index of the unique B face.
    pub fn single_block(&self) -> Result<usize> {
        let blocks = self.block_faces();
        if blocks.len() != 1 {
            return Err(Error::BlockCount { expected: 1, found: blocks.len() });
        }
        Ok(blocks[0])
    }

    /// Boundary cycle of the unique B face.
    pub fn block_boundary(&self) -> Result<&[VertexId]> {
        Ok(&self.faces[self.single_block()?].vertices)
    }

    /// Whether `uv` is an edge on the boundary of some B face.
    pub fn is_block_boundary_edge(&self, u: VertexId, v: VertexId) -> bool {
        match self.edge_index(u, v) {
            Some(e) => self.edge_faces[e].iter().any(|&f| self.faces[f].label == FaceLabel::B),
            None => false,
        }
    }

    pub fn classify_edge(&self, u: VertexId, v: VertexId) -> Result<EdgeClass> {
        let e = self.edge_index(u, v).ok_or(Error::UnknownEdge { u, v })?;
        let [f, g] = self.edge_faces[e];
        Ok(EdgeClass::from_labels(self.faces[f].label, self.faces[g].label))
    }

    pub fn edges_of_class(&self, class: EdgeClass) -> Vec<(VertexId, VertexId)> {
        self.edges()
            .iter()
            .enumerate()
            .filter(|(e, _)| {
                let [f, g] = self.edge_faces[*e];
                EdgeClass::from_labels(self.faces[f].label, self.faces[g].label) == class
            })
            .map(|(_, &uv)| uv)
            .collect()
    }

    /// Neighbours of `v` in the cyclic order induced by the face orientation.
    pub fn rotation(&self, v: VertexId) -> Vec<VertexId> {
        // Each face through v contributes the corner (prev, next); chaining
        // next -> prev of the following face walks around v.
        let mut next_of: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for face in &self.faces {
            if let Some(i) = face.vertices.iter().position(|&x| x == v) {
                let k = face.len();
                let prev = face.vertices[(i + k - 1) % k];
                let next = face.vertices[(i + 1) % k];
                next_of.insert(next, prev);
            }
        }
        let Some(&start) = next_of.keys().next() else {
            return Vec::new();
        };
        let mut out = vec![start];
        let mut cur = next_of[&start];
        while cur != start {
            out.push(cur);
            cur = next_of[&cur];
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Result<FaceGraph> {
        let faces =
            self.faces.iter().map(|f| Face::new(f.label, f.vertices.iter().map(|&v| perm[v]).collect())).collect();
        Self::build(self.vertex_count, faces, self.faces.len() == 2)
    }

    /// Same embedding with face labels replaced.
    pub fn relabelled_faces(&self, labels: &[FaceLabel]) -> Result<FaceGraph> {
        let faces = self.faces.iter().zip(labels).map(|(f, &l)| Face::new(l, f.vertices.clone())).collect();
        Self::build(self.vertex_count, faces, false)
    }

    /// Whether the normalised vertex cycle is the boundary of a face.
    pub fn is_face_boundary(&self, cycle: &[VertexId]) -> bool {
        let target = CycleInG::normalised(cycle.to_vec());
        self.faces.iter().any(|f| f.len() == cycle.len() && CycleInG::normalised(f.vertices.clone()) == target)
    }
}

fn is_connected(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in g.neighbours(x) {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

/// The corners at `v` must chain into one cycle through all its neighbours.
fn link_is_cycle(faces: &[Face], v: VertexId, g: &SimpleGraph) -> bool {
    let mut link: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for face in faces {
        if let Some(i) = face.vertices.iter().position(|&x| x == v) {
            let k = face.len();
            let prev = face.vertices[(i + k - 1) % k];
            let next = face.vertices[(i + 1) % k];
            link.entry(prev).or_default().push(next);
            link.entry(next).or_default().push(prev);
        }
    }
    let degree = g.degree(v);
    if link.len() != degree || link.values().any(|adj| adj.len() != 2) {
        return false;
    }
    let Some(&start) = link.keys().next() else {
        return false;
    };
    let (mut prev, mut cur) = (start, link[&start][0]);
    let mut steps = 1;
    while cur != start {
        let adj = &link[&cur];
        let nxt = if adj[0] == prev { adj[1] } else { adj[0] };
        prev = cur;
        cur = nxt;
        steps += 1;
        if steps > degree {
            return false;
        }
    }
    steps == degree
}

/// Small hand-entered face graphs.
pub mod fixtures {
    use super::*;

    pub fn fg(n: usize, faces: &[(char, &[usize])]) -> FaceGraph {
        FaceGraph::new(n, faces_of(faces)).unwrap()
    }

    pub fn faces_of(faces: &[(char, &[usize])]) -> Vec<Face> {
        faces
            .iter()
            .map(|&(l, vs)| {
                let label = match l {
                    'T' => FaceLabel::T,
                    'B' => FaceLabel::B,
                    _ => FaceLabel::H,
                };
                Face::new(label, vs.to_vec())
            })
            .collect()
    }

    pub fn tetrahedron() -> FaceGraph {
        fg(4, &[('T', &[0, 1, 2]), ('T', &[0, 3, 1]), ('T', &[1, 3, 2]), ('T', &[0, 2, 3])])
    }

    pub fn octahedron() -> FaceGraph {
        // Poles 0 and 5 over the square 1 2 3 4.
        fg(
            6,
            &[
                ('T', &[0, 1, 2]),
                ('T', &[0, 2, 3]),
                ('T', &[0, 3, 4]),
                ('T', &[0, 4, 1]),
                ('T', &[5, 2, 1]),
                ('T', &[5, 3, 2]),
                ('T', &[5, 4, 3]),
                ('T', &[5, 1, 4]),
            ],
        )
    }

    /// Hexagonal block, three quadrilateral holes, nine vertices.
    pub fn hexagon_three_quads() -> FaceGraph {
        fg(
            9,
            &[
                ('B', &[0, 1, 2, 3, 4, 5]),
                ('H', &[4, 3, 7, 6]),
                ('T', &[3, 2, 7]),
                ('H', &[2, 1, 8, 7]),
                ('T', &[1, 0, 8]),
                ('H', &[0, 5, 6, 8]),
                ('T', &[5, 4, 6]),
                ('T', &[6, 7, 8]),
            ],
        )
    }

    /// Heptagonal block, four quadrilateral holes, one non-facial critical
    /// 5-cycle `4 5 6 7 9`.
    pub fn heptagon_four_quads() -> FaceGraph {
        fg(
            11,
            &[
                ('B', &[0, 1, 2, 3, 4, 5, 6]),
                ('H', &[0, 1, 8, 7]),
                ('T', &[1, 2, 8]),
                ('H', &[8, 2, 3, 9]),
                ('T', &[7, 8, 9]),
                ('T', &[9, 3, 4]),
                ('H', &[7, 9, 4, 10]),
                ('T', &[10, 4, 5]),
                ('H', &[6, 7, 10, 5]),
                ('T', &[0, 7, 6]),
            ],
        )
    }

    /// Octagonal block, five quadrilateral holes, two non-facial critical
    /// 5-cycles.
    pub fn octagon_five_quads() -> FaceGraph {
        fg(
            13,
            &[
                ('B', &[0, 1, 2, 3, 4, 5, 6, 7]),
                ('H', &[0, 1, 9, 8]),
                ('T', &[1, 2, 9]),
                ('H', &[9, 2, 3, 10]),
                ('T', &[10, 3, 4]),
                ('T', &[8, 9, 12]),
                ('H', &[12, 9, 10, 4]),
                ('T', &[12, 4, 5]),
                ('H', &[8, 12, 5, 11]),
                ('T', &[11, 5, 6]),
                ('H', &[7, 8, 11, 6]),
                ('T', &[0, 8, 7]),
            ],
        )
    }

    /// Hexagonal block with one hexagonal hole and seven triangles.
    pub fn hexagon_hexagonal_hole() -> FaceGraph {
        fg(
            9,
            &[
                ('B', &[0, 1, 2, 3, 4, 5]),
                ('T', &[4, 3, 6]),
                ('T', &[4, 6, 5]),
                ('T', &[3, 7, 2]),
                ('T', &[7, 1, 2]),
                ('T', &[7, 8, 1]),
                ('T', &[8, 0, 1]),
                ('H', &[6, 3, 7, 8, 0, 5]),
            ],
        )
    }

    /// Quadrilateral block `0 4 1 2` whose diagonal `2 4` is an edge of `G`.
    /// `G†` has freedom 6, but the block's discus plus the chord has
    /// freedom 5.
    pub fn quad_block_with_chord() -> FaceGraph {
        fg(5, &[('B', &[0, 4, 1, 2]), ('H', &[1, 4, 2, 3]), ('T', &[1, 3, 2]), ('T', &[0, 2, 4])])
    }

    /// Quadrilateral block `0 3 4 1` and hole `1 4 3 2` sharing the path
    /// `1 4 3`; `G†` is `(3,6)`-tight.
    pub fn quad_block_and_hole_sharing_a_path() -> FaceGraph {
        fg(5, &[('T', &[0, 1, 2]), ('T', &[0, 2, 3]), ('B', &[0, 3, 4, 1]), ('H', &[1, 4, 3, 2])])
    }

    /// Hexagonal block with one quadrilateral hole; `G†` has freedom 4.
    pub fn hexagon_one_quad() -> FaceGraph {
        fg(
            9,
            &[
                ('B', &[0, 1, 2, 3, 4, 5]),
                ('H', &[3, 7, 8, 6]),
                ('T', &[4, 3, 6]),
                ('T', &[4, 6, 5]),
                ('T', &[5, 6, 0]),
                ('T', &[6, 8, 0]),
                ('T', &[8, 1, 0]),
                ('T', &[8, 7, 1]),
                ('T', &[7, 2, 1]),
                ('T', &[7, 3, 2]),
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn tetrahedron_is_a_sphere() {
        let g = tetrahedron();
        assert_eq!(g.class(), (0, 0));
        assert!(g.is_sphere());
        assert_eq!(g.edge_count(), 6);
        for &(u, v) in g.edges() {
            assert_eq!(g.classify_edge(u, v).unwrap(), EdgeClass::TT);
        }
    }

    #[test]
    fn hexagon_three_quads_counts() {
        let g = hexagon_three_quads();
        assert_eq!(g.class(), (1, 3));
        assert_eq!(g.edge_count(), 15);
        let mut bh = g.edges_of_class(EdgeClass::BH);
        bh.sort();
        assert_eq!(bh, vec![(0, 5), (1, 2), (3, 4)]);
        assert!(g.edges_of_class(EdgeClass::TT).is_empty());
    }

    #[test]
    fn octahedron_missing_a_face_breaks_euler() {
        let g = octahedron();
        let faces = g.faces()[1..].to_vec();
        assert_eq!(FaceGraph::new(6, faces).unwrap_err(), Error::EulerViolation { characteristic: 1 });
    }

    #[test]
    fn validation_errors() {
        let bad_t = faces_of(&[('T', &[0, 1, 2, 3]), ('H', &[0, 3, 2, 1])]);
        assert_eq!(FaceGraph::new(4, bad_t).unwrap_err(), Error::UnlabelledPolygon { face: 0 });
        let labelled = faces_of(&[('B', &[0, 1, 2]), ('T', &[0, 2, 1])]);
        assert_eq!(FaceGraph::new(3, labelled).unwrap_err(), Error::LabelledTriangle { face: 0 });
        let repeated = faces_of(&[('H', &[0, 1, 0, 2])]);
        assert_eq!(FaceGraph::new(3, repeated).unwrap_err(), Error::NonSimpleBoundary { face: 0 });
        let short = faces_of(&[('T', &[0, 1])]);
        assert_eq!(FaceGraph::new(2, short).unwrap_err(), Error::FaceTooShort { face: 0 });
        let bare = faces_of(&[('B', &[0, 1, 2, 3]), ('H', &[0, 3, 2, 1])]);
        assert_eq!(FaceGraph::new(4, bare).unwrap_err(), Error::DegenerateEmbedding);
    }

    #[test]
    fn edge_in_three_faces_is_rejected() {
        // Three triangles on one edge plus enough faces to satisfy Euler.
        let faces = faces_of(&[('T', &[0, 1, 2]), ('T', &[0, 1, 3]), ('T', &[0, 1, 4]), ('T', &[2, 3, 4])]);
        assert!(matches!(
            FaceGraph::new(5, faces).unwrap_err(),
            Error::EulerViolation { .. } | Error::EdgeFaceCount { .. }
        ));
    }

    #[test]
    fn faces_are_oriented_consistently() {
        let faces = faces_of(&[('T', &[0, 1, 2]), ('T', &[0, 1, 3]), ('T', &[1, 2, 3]), ('T', &[0, 2, 3])]);
        let g = FaceGraph::new(4, faces).unwrap();
        for e in 0..g.edge_count() {
            let (u, v) = g.edges()[e];
            let [f1, f2] = g.edge_faces(e);
            let forward = |f: &Face| {
                let k = f.len();
                (0..k).any(|i| f.vertices[i] == u && f.vertices[(i + 1) % k] == v)
            };
            assert_ne!(forward(g.face(f1)), forward(g.face(f2)));
        }
    }

    #[test]
    fn rotation_lists_all_neighbours() {
        let g = octahedron();
        let mut r = g.rotation(0);
        assert_eq!(r.len(), 4);
        r.sort();
        assert_eq!(r, vec![1, 2, 3, 4]);
    }

    #[test]
    fn triangle_with_two_faces_is_allowed() {
        let g = fg(3, &[('T', &[0, 1, 2]), ('T', &[0, 2, 1])]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn hexagonal_hole_fixture_has_tt_edges() {
        let g = hexagon_hexagonal_hole();
        assert_eq!(g.classify_edge(4, 6).unwrap(), EdgeClass::TT);
        assert_eq!(g.classify_edge(0, 1).unwrap(), EdgeClass::BT);
        assert!(g.classify_edge(0, 3).is_err());
    }
}
