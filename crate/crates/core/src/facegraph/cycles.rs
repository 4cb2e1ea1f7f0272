//! Simple cycles, the two sides of a cycle, and critical separating cycles.
//!
//! Every simple cycle `c` of a sphere embedding separates the faces into two
//! sides. The side holding the B face is the exterior; capping it with `c`
//! gives the external face graph `G1`, and `Ext(c) = G1†`. The cycle is
//! critical when `Ext(c)` is `(3,6)`-tight.
//!
//! Length pruning: for a face graph `J` with one B face,
//! `f(J†) = 6 + Σ_H (|H| - 3) - (|B| - 3)`. In `G1` the cap is an H face when
//! `|c| >= 4`, so `f(Ext(c)) = 6` forces `|c| <= |∂B|`. Only cycles of length
//! at most `max(3, |∂B|)` need to be examined.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::{ordered, Face, FaceGraph, FaceLabel};
use crate::construct::{discus_and_hole, looped_2sigma};
use crate::graph::{SimpleGraph, VertexId};
use crate::oracle::check_36_bounded;
use crate::pebble::pebble_game;
use crate::{Error, Result};

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;
pub const DEFAULT_CYCLE_VERTEX_BOUND: usize = 24;

/// A simple cycle, stored starting at its least vertex and running towards
/// the smaller of that vertex's two cycle neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleInG {
    vertices: Vec<VertexId>,
}

impl CycleInG {
    pub fn new(g: &FaceGraph, vertices: &[VertexId]) -> Result<Self> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::NotACycle);
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != k {
            return Err(Error::NotACycle);
        }
        for i in 0..k {
            let (u, v) = (vertices[i], vertices[(i + 1) % k]);
            if u >= g.vertex_count() || v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), count: g.vertex_count() });
            }
            if !g.has_edge(u, v) {
                return Err(Error::UnknownEdge { u, v });
            }
        }
        Ok(Self::normalised(vertices.to_vec()))
    }

    pub(crate) fn normalised(mut vertices: Vec<VertexId>) -> Self {
        if let Some(i) = (0..vertices.len()).min_by_key(|&i| vertices[i]) {
            vertices.rotate_left(i);
        }
        let k = vertices.len();
        if k > 2 && vertices[k - 1] < vertices[1] {
            vertices[1..].reverse();
        }
        Self { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Cycle edges as `(min, max)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| ordered(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn contains_edge(&self, u: VertexId, v: VertexId) -> bool {
        let e = ordered(u, v);
        self.edges().any(|x| x == e)
    }
}

/// Faces on each side of `c`: `(exterior, interior)`, the exterior being the
/// side that holds the B face.
pub fn cycle_sides(g: &FaceGraph, c: &CycleInG) -> Result<(Vec<usize>, Vec<usize>)> {
    let block = g.single_block()?;
    check_cycle(g, c)?;
    let cut: BTreeSet<(VertexId, VertexId)> = c.edges().collect();
    let mut reached = vec![false; g.faces().len()];
    reached[block] = true;
    let mut stack = vec![block];
    while let Some(f) = stack.pop() {
        for e in g.face(f).edges() {
            if cut.contains(&e) {
                continue;
            }
            let idx = g.edge_index(e.0, e.1).expect("face edge exists");
            for h in g.edge_faces(idx) {
                if !reached[h] {
                    reached[h] = true;
                    stack.push(h);
                }
            }
        }
    }
    let exterior: Vec<usize> = (0..reached.len()).filter(|&f| reached[f]).collect();
    let interior: Vec<usize> = (0..reached.len()).filter(|&f| !reached[f]).collect();
    if interior.is_empty() {
        return Err(Error::Internal("simple cycle does not separate the sphere".into()));
    }
    Ok((exterior, interior))
}

fn check_cycle(g: &FaceGraph, c: &CycleInG) -> Result<()> {
    CycleInG::new(g, c.vertices()).map(|_| ())
}

/// Result of cutting a face graph along a cycle. Vertex maps send new ids to
/// ids in the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSplit {
    pub external: FaceGraph,
    pub internal: FaceGraph,
    pub external_vertices: Vec<VertexId>,
    pub internal_vertices: Vec<VertexId>,
}

fn side_graph(g: &FaceGraph, side: &[usize], c: &CycleInG, cap: FaceLabel) -> Result<(FaceGraph, Vec<VertexId>)> {
    let mut vs: BTreeSet<VertexId> = c.vertices().iter().copied().collect();
    for &f in side {
        vs.extend(g.face(f).vertices.iter().copied());
    }
    let old: Vec<VertexId> = vs.into_iter().collect();
    let new_of: BTreeMap<VertexId, VertexId> = old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut faces: Vec<Face> = side
        .iter()
        .map(|&f| {
            let face = g.face(f);
            Face::new(face.label, face.vertices.iter().map(|v| new_of[v]).collect())
        })
        .collect();
    faces.push(Face::new(cap, c.vertices().iter().map(|v| new_of[v]).collect()));
    Ok((FaceGraph::new_allow_degenerate(old.len(), faces)?, old))
}

/// The external face graph `G1`: the B side of `c`, capped by `c` as an H
/// face (or a T face when `|c| = 3`). For `c = ∂B` this is the bare cycle.
pub fn external_face_graph(g: &FaceGraph, c: &CycleInG) -> Result<(FaceGraph, Vec<VertexId>)> {
    let (exterior, _) = cycle_sides(g, c)?;
    let cap = if c.len() >= 4 { FaceLabel::H } else { FaceLabel::T };
    side_graph(g, &exterior, c, cap)
}

/// Cuts `g` along `c`. The internal face graph gets `c` as its B face, or as
/// a T face when `|c| = 3`.
pub fn split_at_cycle(g: &FaceGraph, c: &CycleInG) -> Result<CycleSplit> {
    let (exterior, interior) = cycle_sides(g, c)?;
    if interior.len() == 1 && g.face(interior[0]).label != FaceLabel::T {
        return Err(Error::DegenerateSplit);
    }
    let (cap_out, cap_in) = if c.len() >= 4 { (FaceLabel::H, FaceLabel::B) } else { (FaceLabel::T, FaceLabel::T) };
    let (external, external_vertices) = side_graph(g, &exterior, c, cap_out)?;
    let (internal, internal_vertices) = side_graph(g, &interior, c, cap_in)?;
    Ok(CycleSplit { external, internal, external_vertices, internal_vertices })
}

/// `Ext(c)`: the discus-and-hole graph of the external face graph.
pub fn ext_dagger(g: &FaceGraph, c: &CycleInG) -> Result<SimpleGraph> {
    let (external, _) = external_face_graph(g, c)?;
    Ok(discus_and_hole(&external))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CriticalityOracle {
    /// `(3,0)` pebble game on `G1^{2σ}`, which is tight exactly when
    /// `Ext(c)` is `(3,6)`-tight.
    #[default]
    Pebble,
    /// Subset enumeration on `Ext(c)`.
    Brute,
}

pub fn is_critical_separating(g: &FaceGraph, c: &CycleInG, oracle: CriticalityOracle) -> Result<bool> {
    let (external, _) = external_face_graph(g, c)?;
    external_is_tight(&external, oracle)
}

fn external_is_tight(external: &FaceGraph, oracle: CriticalityOracle) -> Result<bool> {
    match oracle {
        CriticalityOracle::Pebble => {
            let looped = looped_2sigma(external)?;
            if looped.freedom() != 0 {
                return Ok(false);
            }
            Ok(pebble_game(&looped, 3, 0)?.is_tight())
        }
        CriticalityOracle::Brute => {
            let dagger = discus_and_hole(external);
            Ok(check_36_bounded(&dagger, DEFAULT_CYCLE_VERTEX_BOUND + 2)?.tight)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleSearch {
    pub nonfacial_only: bool,
    pub oracle: CriticalityOracle,
    pub max_vertices: usize,
    pub cap: usize,
}

impl Default for CycleSearch {
    fn default() -> Self {
        Self {
            nonfacial_only: false,
            oracle: CriticalityOracle::Pebble,
            max_vertices: DEFAULT_CYCLE_VERTEX_BOUND,
            cap: DEFAULT_CYCLE_CAP,
        }
    }
}

pub fn enumerate_critical_separating_cycles(g: &FaceGraph, nonfacial_only: bool) -> Result<Vec<CycleInG>> {
    enumerate_critical_separating_cycles_with(g, &CycleSearch { nonfacial_only, ..CycleSearch::default() })
}

/// All critical separating cycles, sorted by length and then vertex list.
/// Triangulated spheres have none by convention.
pub fn enumerate_critical_separating_cycles_with(g: &FaceGraph, search: &CycleSearch) -> Result<Vec<CycleInG>> {
    if g.block_count() == 0 {
        return Ok(Vec::new());
    }
    let block = g.single_block()?;
    if g.vertex_count() > search.max_vertices {
        return Err(Error::SizeBoundExceeded { vertices: g.vertex_count(), bound: search.max_vertices });
    }
    let boundary_len = g.face(block).len();
    let facial: BTreeSet<CycleInG> = g.faces().iter().map(|f| CycleInG::normalised(f.vertices.clone())).collect();
    let mut out = Vec::new();
    for c in simple_cycles(g, boundary_len.max(3), search.cap)? {
        if search.nonfacial_only && facial.contains(&c) {
            continue;
        }
        // Cheap count on the exterior before building anything.
        let (exterior, _) = cycle_sides(g, &c)?;
        let mut vs = BTreeSet::new();
        let mut es = BTreeSet::new();
        for &f in &exterior {
            vs.extend(g.face(f).vertices.iter().copied());
            es.extend(g.face(f).edges());
        }
        if 3 * vs.len() as i64 - es.len() as i64 - 2 * boundary_len as i64 != 0 {
            continue;
        }
        let cap = if c.len() >= 4 { FaceLabel::H } else { FaceLabel::T };
        let (external, _) = side_graph(g, &exterior, &c, cap)?;
        if external_is_tight(&external, search.oracle)? {
            out.push(c);
        }
    }
    out.sort_by(|a, b| (a.len(), a.vertices()).cmp(&(b.len(), b.vertices())));
    Ok(out)
}

/// Every simple cycle of length at most `max_len`, each listed once.
pub fn simple_cycles(g: &FaceGraph, max_len: usize, cap: usize) -> Result<Vec<CycleInG>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        extend(g, s, &mut path, &mut on_path, max_len, cap, &mut out)?;
        on_path[s] = false;
    }
    Ok(out)
}

fn extend(
    g: &FaceGraph,
    s: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    max_len: usize,
    cap: usize,
    out: &mut Vec<CycleInG>,
) -> Result<()> {
    let last = *path.last().expect("path is never empty");
    for &w in g.neighbours(last) {
        if w == s && path.len() >= 3 && path[1] < last {
            if out.len() >= cap {
                return Err(Error::CycleCapExceeded { cap });
            }
            out.push(CycleInG { vertices: path.clone() });
        } else if w > s && !on_path[w] && path.len() < max_len {
            on_path[w] = true;
            path.push(w);
            extend(g, s, path, on_path, max_len, cap, out)?;
            path.pop();
            on_path[w] = false;
        }
    }
    Ok(())
}
