//! Canonical labelling for small graphs.
//!
//! Individualisation-refinement: the vertex partition is refined to an
//! equitable one by neighbour-cell counts, then a non-singleton cell is split
//! by individualising each of its vertices in turn. Every discrete leaf gives a
//! labelling; the lexicographically smallest relabelled edge list is the
//! canonical form. Automorphisms discovered at leaves prune sibling branches
//! lying in the same orbit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use sha2::{Digest, Sha256};

use crate::facegraph::{FaceGraph, FaceLabel};
use crate::graph::SimpleGraph;
use crate::{Error, Result};

/// Default vertex bound for [`canonical_hash`].
pub const DEFAULT_SIZE_BOUND: usize = 16;

/// SHA-256 of a canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphDigest(pub [u8; 32]);

impl fmt::Display for GraphDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GraphDigest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphDigest({self})")
    }
}

/// Canonical labelling and the certificate it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `labelling[v]` is the canonical position of vertex `v`.
    pub labelling: Vec<usize>,
    /// Colours listed by canonical position, followed by the sorted
    /// relabelled edge list flattened into pairs.
    pub certificate: Vec<u32>,
}

impl CanonicalForm {
    pub fn digest(&self) -> GraphDigest {
        let mut hasher = Sha256::new();
        hasher.update((self.labelling.len() as u32).to_le_bytes());
        for x in &self.certificate {
            hasher.update(x.to_le_bytes());
        }
        let out: [u8; 32] = hasher.finalize().into();
        GraphDigest(out)
    }
}

/// Isomorphism-invariant digest of a simple graph with at most
/// [`DEFAULT_SIZE_BOUND`] vertices.
pub fn canonical_hash(g: &SimpleGraph) -> Result<GraphDigest> {
    canonical_hash_bounded(g, DEFAULT_SIZE_BOUND)
}

pub fn canonical_hash_bounded(g: &SimpleGraph, bound: usize) -> Result<GraphDigest> {
    if g.vertex_count() > bound {
        return Err(Error::SizeBoundExceeded { vertices: g.vertex_count(), bound });
    }
    let colours = vec![0; g.vertex_count()];
    Ok(canonical_form(g.vertex_count(), g.edges(), &colours).digest())
}

/// Isomorphism-invariant digest of a face graph, reflections included. It
/// hashes the incidence graph on vertices, edges and faces, with faces
/// coloured by label.
pub fn face_graph_digest(g: &FaceGraph) -> GraphDigest {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let mut colours = vec![0; n];
    colours.extend(core::iter::repeat_n(1, m));
    colours.extend(g.faces().iter().map(|f| match f.label {
        FaceLabel::T => 2,
        FaceLabel::B => 3,
        FaceLabel::H => 4,
    }));
    let mut edges = Vec::with_capacity(4 * m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let [a, b] = g.edge_faces(e);
        edges.extend([(u, n + e), (v, n + e), (n + e, n + m + a), (n + e, n + m + b)]);
    }
    canonical_form(colours.len(), &edges, &colours).digest()
}

/// Canonical form of a vertex-coloured multigraph (loops and parallel edges
/// allowed). Isomorphisms must preserve colours.
pub fn canonical_form(n: usize, edges: &[(usize, usize)], colours: &[u32]) -> CanonicalForm {
    assert_eq!(colours.len(), n, "one colour per vertex");
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        if u != v {
            adj[v].push(u);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colours[v], v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(cell) if colours[cell[0]] == colours[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut search = Search { n, edges, adj: &adj, colours, first: None, best: None, automorphisms: Vec::new() };
    let mut path = Vec::new();
    search.explore(cells, &mut path);
    let best = search.best.expect("the search tree has at least one leaf");
    CanonicalForm { labelling: best.labelling, certificate: best.certificate }
}

struct Leaf {
    certificate: Vec<u32>,
    labelling: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    adj: &'a [Vec<usize>],
    colours: &'a [u32],
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(d)` to unwind the search to the node at depth `d`.
    fn explore(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.n, self.adj, cells);
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut cell = cells[target].clone();
        cell.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() {
                let orbits = self.orbits_fixing(path);
                if tried.iter().any(|&t| find(&orbits, t) == find(&orbits, v)) {
                    continue;
                }
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&x| x != v).collect());
            next.extend(cells[target + 1..].iter().cloned());
            path.push(v);
            let jump = self.explore(next, path);
            path.pop();
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let mut labelling = vec![0; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            labelling[cell[0]] = pos;
        }
        let certificate = certificate(self.n, self.edges, self.colours, &labelling);
        let leaf = Leaf { certificate, labelling, path: path.to_vec() };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                certificate: leaf.certificate.clone(),
                labelling: leaf.labelling.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if leaf.certificate == first.certificate {
            let jump = common_prefix(&leaf.path, &first.path);
            let gamma = automorphism(&leaf.labelling, &first.labelling);
            self.automorphisms.push(gamma);
            return Some(jump);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.certificate.cmp(&best.certificate) {
            core::cmp::Ordering::Equal => {
                let jump = common_prefix(&leaf.path, &best.path);
                let gamma = automorphism(&leaf.labelling, &best.labelling);
                self.automorphisms.push(gamma);
                Some(jump)
            }
            core::cmp::Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            core::cmp::Ordering::Greater => None,
        }
    }

    /// Union-find parents of the orbits of the known automorphisms fixing
    /// `path` pointwise.
    fn orbits_fixing(&self, path: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        for gamma in &self.automorphisms {
            if path.iter().all(|&p| gamma[p] == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    let (a, b) = (find(&parent, v), find(&parent, w));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        parent
    }
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Maps each vertex under `from` to the vertex with the same position under `to`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut inverse_to = vec![0; to.len()];
    for (v, &pos) in to.iter().enumerate() {
        inverse_to[pos] = v;
    }
    from.iter().map(|&pos| inverse_to[pos]).collect()
}

fn certificate(n: usize, edges: &[(usize, usize)], colours: &[u32], labelling: &[usize]) -> Vec<u32> {
    let mut by_position = vec![0u32; n];
    for v in 0..n {
        by_position[labelling[v]] = colours[v];
    }
    let mut relabelled: Vec<(u32, u32)> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (labelling[u] as u32, labelling[v] as u32);
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    relabelled.sort_unstable();
    let mut out = by_position;
    out.reserve(2 * relabelled.len());
    for (a, b) in relabelled {
        out.push(a);
        out.push(b);
    }
    out
}

/// Refines an ordered partition until every vertex in a cell sees the same
/// multiset of neighbouring cells. Cell order depends only on invariant data.
fn refine(n: usize, adj: &[Vec<usize>], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut key: Vec<usize> = adj[v].iter().map(|&w| cell_of[w]).collect();
                    key.sort_unstable();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}
