//! Structural statements about `(3,6)`-tight face graphs with one block,
//! checked instance by instance. Each check reports whether its hypothesis
//! applied and, if so, whether the conclusion held.

use rigidkit_core::facegraph::{
    enumerate_critical_separating_cycles, is_critical_separating, is_indivisible, is_terminal, simple_cycles,
    split_at_cycle, CriticalityOracle, CycleInG, EdgeClass, FaceGraph, DEFAULT_CYCLE_CAP,
};
use rigidkit_core::{Result, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Lemma {
    /// Two vertices of `∂B` on a common hole force a non-facial critical
    /// separating cycle, provided neither arc of the hole between them runs
    /// entirely along `∂B`. An arc made of one BH edge is the case of two
    /// vertices joined by a BH edge; longer such arcs break the statement
    /// (see [`common_hole_applies`]).
    CommonHole,
    /// Critical separating cycles of the internal face graph of a non-facial
    /// critical separating cycle are critical separating in `G`.
    CycleInheritance,
    /// No TT edge and indivisible implies at least three BH edges.
    AtLeastThreeBh,
    /// With exactly three BH edges as well, every hole is a quadrilateral and
    /// the BH edges are not three consecutive edges of `∂B`.
    ExactlyThreeBh,
    /// Terminal implies no non-facial 3-cycle.
    TerminalTriangles,
}

impl Lemma {
    pub const ALL: [Lemma; 5] = [
        Lemma::CommonHole,
        Lemma::CycleInheritance,
        Lemma::AtLeastThreeBh,
        Lemma::ExactlyThreeBh,
        Lemma::TerminalTriangles,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Lemma::CommonHole => "common-hole",
            Lemma::CycleInheritance => "cycle-inheritance",
            Lemma::AtLeastThreeBh => "at-least-three-bh",
            Lemma::ExactlyThreeBh => "exactly-three-bh",
            Lemma::TerminalTriangles => "terminal-triangles",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct LemmaOutcome {
    pub lemma: Lemma,
    pub applicable: bool,
    pub holds: bool,
}

impl LemmaOutcome {
    fn skip(lemma: Lemma) -> Self {
        Self { lemma, applicable: false, holds: true }
    }

    fn check(lemma: Lemma, holds: bool) -> Self {
        Self { lemma, applicable: true, holds }
    }
}

/// Runs every check on `g`, which must have one block and a `(3,6)`-tight
/// discus-and-hole graph.
pub fn check_lemmas(g: &FaceGraph) -> Result<Vec<LemmaOutcome>> {
    let nonfacial = enumerate_critical_separating_cycles(g, true)?;
    let tt = g.edges_of_class(EdgeClass::TT);
    let bh = g.edges_of_class(EdgeClass::BH);
    let indivisible = is_indivisible(g)?;
    let mut out = vec![common_hole(g, &nonfacial)?, cycle_inheritance(g, &nonfacial)?];

    if tt.is_empty() && indivisible {
        out.push(LemmaOutcome::check(Lemma::AtLeastThreeBh, bh.len() >= 3));
    } else {
        out.push(LemmaOutcome::skip(Lemma::AtLeastThreeBh));
    }
    if tt.is_empty() && indivisible && bh.len() == 3 {
        let quads = g.hole_faces().iter().all(|&f| g.face(f).len() == 4);
        out.push(LemmaOutcome::check(Lemma::ExactlyThreeBh, quads && !three_consecutive(g.block_boundary()?, &bh)));
    } else {
        out.push(LemmaOutcome::skip(Lemma::ExactlyThreeBh));
    }
    if is_terminal(g)? {
        let triangles = simple_cycles(g, 3, DEFAULT_CYCLE_CAP)?;
        out.push(LemmaOutcome::check(
            Lemma::TerminalTriangles,
            triangles.iter().all(|c| g.is_face_boundary(c.vertices())),
        ));
    } else {
        out.push(LemmaOutcome::skip(Lemma::TerminalTriangles));
    }
    Ok(out)
}

/// Whether some pair of distinct vertices of `∂B` shares a hole and is not
/// joined by a BH edge. With `strict`, both arcs of the hole between the pair
/// must also contain an edge off `∂B`.
pub fn common_hole_applies(g: &FaceGraph, strict: bool) -> Result<bool> {
    let boundary = g.block_boundary()?;
    let is_bh = |a: VertexId, b: VertexId| g.classify_edge(a, b).is_ok_and(|c| c == EdgeClass::BH);
    for h in g.hole_faces() {
        let cycle = &g.face(h).vertices;
        let k = cycle.len();
        let on_block: Vec<usize> = (0..k).filter(|&i| boundary.contains(&cycle[i])).collect();
        for (a, &i) in on_block.iter().enumerate() {
            for &j in &on_block[a + 1..] {
                let (v, w) = (cycle[i], cycle[j]);
                if g.has_edge(v, w) && is_bh(v, w) {
                    continue;
                }
                let along_block =
                    |from: usize, len: usize| (0..len).all(|s| is_bh(cycle[(from + s) % k], cycle[(from + s + 1) % k]));
                if strict && (along_block(i, j - i) || along_block(j, k - (j - i))) {
                    continue;
                }
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn common_hole(g: &FaceGraph, nonfacial: &[CycleInG]) -> Result<LemmaOutcome> {
    Ok(if common_hole_applies(g, true)? {
        LemmaOutcome::check(Lemma::CommonHole, !nonfacial.is_empty())
    } else {
        LemmaOutcome::skip(Lemma::CommonHole)
    })
}

fn cycle_inheritance(g: &FaceGraph, nonfacial: &[CycleInG]) -> Result<LemmaOutcome> {
    if nonfacial.is_empty() {
        return Ok(LemmaOutcome::skip(Lemma::CycleInheritance));
    }
    for c in nonfacial {
        let split = split_at_cycle(g, c)?;
        for d in enumerate_critical_separating_cycles(&split.internal, false)? {
            let mapped: Vec<VertexId> = d.vertices().iter().map(|&v| split.internal_vertices[v]).collect();
            let d = CycleInG::new(g, &mapped)?;
            if !is_critical_separating(g, &d, CriticalityOracle::Pebble)? {
                return Ok(LemmaOutcome::check(Lemma::CycleInheritance, false));
            }
        }
    }
    Ok(LemmaOutcome::check(Lemma::CycleInheritance, true))
}

/// Whether three of the given edges are consecutive along the cycle.
fn three_consecutive(boundary: &[VertexId], edges: &[(VertexId, VertexId)]) -> bool {
    let k = boundary.len();
    let on = |i: usize| {
        let (a, b) = (boundary[i % k], boundary[(i + 1) % k]);
        edges.contains(&(a.min(b), a.max(b)))
    };
    (0..k).any(|i| on(i) && on(i + 1) && on(i + 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rigidkit_core::facegraph::fixtures::*;

    fn outcome(g: &FaceGraph, lemma: Lemma) -> LemmaOutcome {
        check_lemmas(g).unwrap().into_iter().find(|o| o.lemma == lemma).unwrap()
    }

    #[test]
    fn hexagon_three_quads_meets_the_three_bh_hypotheses() {
        let g = hexagon_three_quads();
        assert_eq!(outcome(&g, Lemma::AtLeastThreeBh), LemmaOutcome::check(Lemma::AtLeastThreeBh, true));
        assert_eq!(outcome(&g, Lemma::ExactlyThreeBh), LemmaOutcome::check(Lemma::ExactlyThreeBh, true));
        assert!(!outcome(&g, Lemma::CycleInheritance).applicable);
    }

    #[test]
    fn nonfacial_cycles_trigger_inheritance() {
        for g in [heptagon_four_quads(), octagon_five_quads()] {
            let o = outcome(&g, Lemma::CycleInheritance);
            assert!(o.applicable && o.holds);
            assert!(check_lemmas(&g).unwrap().iter().all(|o| o.holds));
        }
    }

    #[test]
    fn hole_sharing_a_path_with_the_block() {
        // Block 0 3 4 1 and hole 1 4 3 2 share the path 1 4 3. Vertices 1 and 3
        // meet the literal hypothesis, yet no non-facial cycle is critical.
        let g = quad_block_and_hole_sharing_a_path();
        assert!(rigidkit_core::oracle::check_36(&rigidkit_core::construct::discus_and_hole(&g)).unwrap().tight);
        assert!(common_hole_applies(&g, false).unwrap());
        assert!(enumerate_critical_separating_cycles(&g, true).unwrap().is_empty());
        assert!(!common_hole_applies(&g, true).unwrap());
    }

    #[test]
    fn consecutive_edges() {
        let b = [0, 1, 2, 3, 4, 5];
        assert!(three_consecutive(&b, &[(0, 1), (1, 2), (2, 3)]));
        assert!(three_consecutive(&b, &[(0, 5), (0, 1), (4, 5)]));
        assert!(!three_consecutive(&b, &[(0, 1), (1, 2), (3, 4)]));
    }
}
