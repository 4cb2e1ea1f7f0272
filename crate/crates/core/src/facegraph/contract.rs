//! TT and BH edge contractions and the predicates built on them.
//!
//! Contracting `uv` into `u` replaces `v` by `u` in every face. The faces on
//! the edge lose `v`; a triangle disappears and a quadrilateral B or H face
//! becomes a T face. A contraction is refused when another face contains
//! both endpoints, since identifying them would pinch that face's boundary.

use alloc::vec::Vec;

use super::cycles::enumerate_critical_separating_cycles;
use super::{EdgeClass, Face, FaceGraph, FaceLabel};
use crate::graph::VertexId;
use crate::{Error, Result};

/// Identifies `remove` with `keep`. Ids above `remove` shift down by one.
pub(crate) fn contract_edge(g: &FaceGraph, keep: VertexId, remove: VertexId) -> Result<FaceGraph> {
    let mut faces = Vec::with_capacity(g.faces().len());
    for face in g.faces() {
        let has_keep = face.contains(keep);
        let has_remove = face.contains(remove);
        let mut vertices: Vec<VertexId> = if has_keep && has_remove {
            if !face.has_edge(keep, remove) {
                return Err(Error::ContractionPinchesFace { u: keep, v: remove });
            }
            face.vertices.iter().copied().filter(|&x| x != remove).collect()
        } else {
            face.vertices.iter().map(|&x| if x == remove { keep } else { x }).collect()
        };
        if vertices.len() < 3 {
            continue;
        }
        for x in &mut vertices {
            if *x > remove {
                *x -= 1;
            }
        }
        let label = if vertices.len() == 3 { FaceLabel::T } else { face.label };
        faces.push(Face::new(label, vertices));
    }
    FaceGraph::new(g.vertex_count() - 1, faces)
}

fn require_class(g: &FaceGraph, u: VertexId, v: VertexId, class: EdgeClass) -> Result<()> {
    if g.classify_edge(u, v)? != class {
        return Err(Error::WrongEdgeClass { u, v, expected: class.as_str() });
    }
    Ok(())
}

/// Common neighbours of `u` and `v` that do not close a face with them.
fn nonfacial_apexes(g: &FaceGraph, u: VertexId, v: VertexId) -> Vec<VertexId> {
    let e = g.edge_index(u, v).expect("edge checked by caller");
    let facial: Vec<VertexId> = g
        .edge_faces(e)
        .iter()
        .filter(|&&f| g.face(f).len() == 3)
        .flat_map(|&f| g.face(f).vertices.iter().copied())
        .collect();
    g.common_neighbours(u, v).into_iter().filter(|w| !facial.contains(w)).collect()
}

/// Contracts the TT edge `uv`, keeping `u`.
pub fn contract_tt(g: &FaceGraph, u: VertexId, v: VertexId) -> Result<FaceGraph> {
    require_class(g, u, v, EdgeClass::TT)?;
    if !nonfacial_apexes(g, u, v).is_empty() {
        return Err(Error::InNonFacialTriangle { u, v });
    }
    contract_edge(g, u, v)
}

/// Contracts the BH edge `uv`, keeping `u`.
pub fn contract_bh(g: &FaceGraph, u: VertexId, v: VertexId) -> Result<FaceGraph> {
    require_class(g, u, v, EdgeClass::BH)?;
    if !g.common_neighbours(u, v).is_empty() {
        return Err(Error::InTriangle { u, v });
    }
    contract_edge(g, u, v)
}

/// Contracts an edge of a triangulated sphere, keeping `u`.
pub fn contract_sphere(g: &FaceGraph, u: VertexId, v: VertexId) -> Result<FaceGraph> {
    if !g.is_sphere() {
        return Err(Error::InvalidParameter("sphere contraction needs a triangulated sphere"));
    }
    contract_tt(g, u, v)
}

/// TT, in no non-facial 3-cycle, and the contraction pinches no face.
pub fn is_contractible_tt(g: &FaceGraph, u: VertexId, v: VertexId) -> bool {
    contract_tt(g, u, v).is_ok()
}

/// Whether a contractible TT edge avoids every non-facial critical
/// separating cycle.
pub fn is_admissible_tt(g: &FaceGraph, u: VertexId, v: VertexId) -> Result<bool> {
    require_class(g, u, v, EdgeClass::TT)?;
    if !nonfacial_apexes(g, u, v).is_empty() {
        return Err(Error::InNonFacialTriangle { u, v });
    }
    if g.block_count() == 0 {
        return Ok(true);
    }
    let critical = enumerate_critical_separating_cycles(g, true)?;
    Ok(!critical.iter().any(|c| c.contains_edge(u, v)))
}

/// Contractible TT edges that lie on no non-facial critical separating
/// cycle, in edge order.
pub fn admissible_tt_edges(g: &FaceGraph) -> Result<Vec<(VertexId, VertexId)>> {
    let candidates: Vec<_> =
        g.edges_of_class(EdgeClass::TT).into_iter().filter(|&(u, v)| is_contractible_tt(g, u, v)).collect();
    if candidates.is_empty() || g.block_count() == 0 {
        return Ok(candidates);
    }
    let critical = enumerate_critical_separating_cycles(g, true)?;
    Ok(candidates.into_iter().filter(|&(u, v)| !critical.iter().any(|c| c.contains_edge(u, v))).collect())
}

/// BH edges whose contraction succeeds, in edge order.
pub fn contractible_bh_edges(g: &FaceGraph) -> Vec<(VertexId, VertexId)> {
    g.edges_of_class(EdgeClass::BH).into_iter().filter(|&(u, v)| contract_bh(g, u, v).is_ok()).collect()
}

/// No admissible TT contraction is available.
pub fn is_terminal(g: &FaceGraph) -> Result<bool> {
    Ok(admissible_tt_edges(g)?.is_empty())
}

/// No BH edge is contractible.
pub fn is_bh_reduced(g: &FaceGraph) -> bool {
    contractible_bh_edges(g).is_empty()
}

/// Every critical separating cycle is a face boundary.
pub fn is_indivisible(g: &FaceGraph) -> Result<bool> {
    Ok(enumerate_critical_separating_cycles(g, true)?.is_empty())
}
