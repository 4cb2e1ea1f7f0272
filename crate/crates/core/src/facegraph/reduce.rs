//! Reduction of a face graph to `K3` by contractions, and its replay as a
//! sequence of vertex splits.
//!
//! The driver tracks two graphs side by side: the face graph itself and the
//! discus-and-hole graph `G†`, whose vertices keep their original labels.
//! Poles carry labels `n` and `n + 1`. Every move contracts an edge of `G†`
//! with exactly two common neighbours, which is the inverse of a vertex split.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::contract::{contract_bh, contract_sphere, contract_tt};
use super::cycles::enumerate_critical_separating_cycles;
use super::{EdgeClass, FaceGraph};
use crate::construct::{discus_and_hole, discus_and_hole_with_poles};
use crate::graph::{SimpleGraph, VertexId};
use crate::oracle::check_36_bounded;
use crate::{Error, Result};

/// Largest `G†` the driver will brute-force when it gets stuck.
const STUCK_CHECK_BOUND: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    ContractBH,
    ContractTT,
    ContractSphere,
}

impl MoveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MoveKind::ContractBH => "contractBH",
            MoveKind::ContractTT => "contractTT",
            MoveKind::ContractSphere => "contractSphere",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "contractBH" => Some(MoveKind::ContractBH),
            "contractTT" => Some(MoveKind::ContractTT),
            "contractSphere" => Some(MoveKind::ContractSphere),
            _ => None,
        }
    }
}

/// One contraction of `G†`, with labels of the original `G†`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    /// Endpoints with `u < v`.
    pub u: VertexId,
    pub v: VertexId,
    pub keep: VertexId,
    /// Neighbours of `keep` before the contraction, other than the removed
    /// vertex. Sorted.
    pub side_a: Vec<VertexId>,
    /// The two common neighbours of `u` and `v`. Sorted.
    pub shared: [VertexId; 2],
}

impl Move {
    pub fn removed(&self) -> VertexId {
        if self.keep == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} keep={} sideA=", self.kind.as_str(), self.u, self.v, self.keep)?;
        for (i, x) in self.side_a.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, " shared={},{}", self.shared[0], self.shared[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    /// `|V(G†)|`.
    pub vertex_count: usize,
    pub moves: Vec<Move>,
}

impl ReductionCertificate {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

struct Driver {
    fg: FaceGraph,
    /// Face-graph id to `G†` label.
    labels: Vec<VertexId>,
    adj: Vec<BTreeSet<VertexId>>,
    poles: Vec<VertexId>,
    moves: Vec<Move>,
}

impl Driver {
    fn common(&self, a: VertexId, b: VertexId) -> Vec<VertexId> {
        self.adj[a].intersection(&self.adj[b]).copied().collect()
    }

    /// Contracts `remove` into `keep` in `G†` (labels) and records the move.
    fn contract_dagger(&mut self, kind: MoveKind, keep: VertexId, remove: VertexId) -> Result<()> {
        let shared = self.common(keep, remove);
        if shared.len() != 2 || !self.adj[keep].contains(&remove) {
            return Err(Error::Internal(format!("edge {keep}-{remove} of G† is not splittable")));
        }
        let side_a: Vec<VertexId> = self.adj[keep].iter().copied().filter(|&x| x != remove).collect();
        let moved: Vec<VertexId> = self.adj[remove].iter().copied().filter(|&x| x != keep).collect();
        for x in moved {
            self.adj[x].remove(&remove);
            self.adj[x].insert(keep);
            self.adj[keep].insert(x);
        }
        self.adj[keep].remove(&remove);
        self.adj[remove].clear();
        self.moves.push(Move {
            kind,
            u: keep.min(remove),
            v: keep.max(remove),
            keep,
            side_a,
            shared: [shared[0], shared[1]],
        });
        Ok(())
    }

    fn apply(&mut self, kind: MoveKind, next: FaceGraph, keep_id: usize, remove_id: usize) -> Result<()> {
        let (keep, remove) = (self.labels[keep_id], self.labels[remove_id]);
        self.contract_dagger(kind, keep, remove)?;
        self.labels.remove(remove_id);
        self.fg = next;
        if self.fg.block_count() == 0 && !self.poles.is_empty() {
            // The block shrank to a triangle; each pole is now a degree-3
            // vertex on it and contracts into the triangle's least vertex.
            for p in core::mem::take(&mut self.poles) {
                let target = *self.adj[p].iter().next().ok_or_else(|| Error::Internal("isolated pole".into()))?;
                self.contract_dagger(MoveKind::ContractSphere, target, p)?;
            }
        }
        self.check_consistent()
    }

    fn check_consistent(&self) -> Result<()> {
        for &(a, b) in self.fg.edges() {
            if !self.adj[self.labels[a]].contains(&self.labels[b]) {
                return Err(Error::Internal("face graph and G† diverged".into()));
            }
        }
        let pole_edges: usize = self.poles.iter().map(|&p| self.adj[p].len()).sum();
        let dagger_edges: usize = self.adj.iter().map(|s| s.len()).sum::<usize>() / 2;
        if dagger_edges != self.fg.edge_count() + pole_edges {
            return Err(Error::Internal("face graph and G† diverged".into()));
        }
        Ok(())
    }

    fn try_bh(&mut self) -> Result<bool> {
        if self.fg.block_count() == 0 {
            return Ok(false);
        }
        for (a, b) in self.fg.edges_of_class(EdgeClass::BH) {
            if self.common(self.labels[a], self.labels[b]).len() != 2 {
                continue;
            }
            if let Ok(next) = contract_bh(&self.fg, a, b) {
                self.apply(MoveKind::ContractBH, next, a, b)?;
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn try_tt(&mut self) -> Result<bool> {
        if self.fg.block_count() == 0 {
            return Ok(false);
        }
        let boundary: Vec<VertexId> = self.fg.block_boundary()?.to_vec();
        let critical = enumerate_critical_separating_cycles(&self.fg, true)?;
        for (a, b) in self.fg.edges_of_class(EdgeClass::TT) {
            if critical.iter().any(|c| c.contains_edge(a, b)) {
                continue;
            }
            if self.common(self.labels[a], self.labels[b]).len() != 2 {
                continue;
            }
            let (keep, remove) = if boundary.contains(&b) && !boundary.contains(&a) { (b, a) } else { (a, b) };
            if let Ok(next) = contract_tt(&self.fg, keep, remove) {
                self.apply(MoveKind::ContractTT, next, keep, remove)?;
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn try_sphere(&mut self) -> Result<bool> {
        if !self.fg.is_sphere() || self.fg.vertex_count() <= 3 {
            return Ok(false);
        }
        for &(a, b) in self.fg.edges() {
            if self.fg.common_neighbours(a, b).len() != 2 {
                continue;
            }
            if let Ok(next) = contract_sphere(&self.fg, a, b) {
                self.apply(MoveKind::ContractSphere, next, a, b)?;
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Reduces `G†` to `K3`: contractible BH edges first, then admissible TT
/// edges, then edges of the triangulated sphere that remains. Ties go to the
/// lowest edge index.
///
/// Fails with [`Error::FreedomNot6`] when `f(G†) != 6`, with
/// [`Error::NotTight`] and a dense vertex set when the driver gets stuck on a
/// graph that is not `(3,6)`-tight, and with [`Error::TheoremViolation`] if it
/// gets stuck on a tight one.
pub fn reduce_to_k3(g: &FaceGraph) -> Result<ReductionCertificate> {
    let m = g.block_count();
    if m > 1 {
        return Err(Error::BlockCount { expected: 1, found: m });
    }
    let dh = discus_and_hole_with_poles(g);
    let dagger = dh.graph;
    let freedom = dagger.freedom();
    if freedom != 6 {
        return Err(Error::FreedomNot6 { freedom });
    }
    let total = dagger.vertex_count();
    let mut adj = vec![BTreeSet::new(); total];
    for &(a, b) in dagger.edges() {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut driver = Driver {
        fg: g.clone(),
        labels: (0..g.vertex_count()).collect(),
        adj,
        poles: dh.poles.first().map(|p| p.to_vec()).unwrap_or_default(),
        moves: Vec::new(),
    };
    while driver.fg.vertex_count() > 3 || !driver.poles.is_empty() {
        let progressed = driver.try_bh()? || driver.try_tt()? || driver.try_sphere()?;
        if !progressed {
            return Err(stuck(&dagger, &driver.fg));
        }
    }
    Ok(ReductionCertificate { vertex_count: total, moves: driver.moves })
}

fn stuck(dagger: &SimpleGraph, fg: &FaceGraph) -> Error {
    match check_36_bounded(dagger, STUCK_CHECK_BOUND) {
        Ok(report) => match (report.witness, report.witness_freedom) {
            (Some(witness), Some(freedom)) => Error::NotTight { witness, freedom },
            _ => Error::TheoremViolation(format!(
                "reduction stuck on a (3,6)-tight G† at a face graph with {} vertices, class {:?}",
                fg.vertex_count(),
                fg.class()
            )),
        },
        Err(e) => e,
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidCertificate(String::from(msg))
}

/// Replays the certificate backwards from `K3` as vertex splits.
pub fn replay(cert: &ReductionCertificate) -> Result<SimpleGraph> {
    let n = cert.vertex_count;
    let mut removed = vec![false; n];
    for mv in &cert.moves {
        if mv.u >= mv.v || mv.v >= n || (mv.keep != mv.u && mv.keep != mv.v) {
            return Err(invalid("move endpoints out of range or unordered"));
        }
        let r = mv.removed();
        if core::mem::replace(&mut removed[r], true) {
            return Err(invalid("a vertex is removed twice"));
        }
    }
    let base: Vec<VertexId> = (0..n).filter(|&v| !removed[v]).collect();
    if base.len() != 3 {
        return Err(invalid("moves do not end at a triangle"));
    }
    let mut present = vec![false; n];
    let mut adj = vec![BTreeSet::new(); n];
    for &a in &base {
        present[a] = true;
        for &b in &base {
            if a != b {
                adj[a].insert(b);
            }
        }
    }
    for mv in cert.moves.iter().rev() {
        let (k, r) = (mv.keep, mv.removed());
        if !present[k] || present[r] {
            return Err(invalid("move refers to a vertex not yet split off"));
        }
        let side: BTreeSet<VertexId> = mv.side_a.iter().copied().collect();
        if side.len() != mv.side_a.len() || !side.is_subset(&adj[k]) {
            return Err(invalid("sideA is not a set of current neighbours"));
        }
        if mv.shared[0] == mv.shared[1] || !mv.shared.iter().all(|s| side.contains(s)) {
            return Err(invalid("shared pair is not inside sideA"));
        }
        let exclusive: Vec<VertexId> = adj[k].difference(&side).copied().collect();
        for &x in &exclusive {
            adj[k].remove(&x);
            adj[x].remove(&k);
            adj[x].insert(r);
            adj[r].insert(x);
        }
        for &s in &mv.shared {
            adj[s].insert(r);
            adj[r].insert(s);
        }
        adj[k].insert(r);
        adj[r].insert(k);
        present[r] = true;
    }
    let mut edges = Vec::new();
    for (a, set) in adj.iter().enumerate() {
        edges.extend(set.iter().filter(|&&b| a < b).map(|&b| (a, b)));
    }
    SimpleGraph::from_edges(n, edges)
}

/// The replay reproduces `G†` exactly, labels included.
pub fn verify_certificate(g: &FaceGraph, cert: &ReductionCertificate) -> Result<bool> {
    let dagger = discus_and_hole(g);
    let rebuilt = replay(cert)?;
    Ok(rebuilt.vertex_count() == dagger.vertex_count() && rebuilt.edge_set() == dagger.edge_set())
}
