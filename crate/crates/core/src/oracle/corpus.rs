//! Seeded random face graphs.
//!
//! A triangulated sphere is grown from `K4` by random vertex splits. Discs
//! are then carved out by growing connected sets of triangles whose boundary
//! stays one simple cycle; each disc's interior vertices are deleted and its
//! boundary becomes a B or H face. Discs never share a triangle but may share
//! boundary vertices and edges.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{face_graph_digest, GraphDigest};
use crate::construct::discus_and_hole;
use crate::facegraph::{ordered, Face, FaceGraph, FaceLabel, GClass};
use crate::graph::VertexId;
use crate::oracle::check_36;
use crate::{Error, Result};

/// Largest sphere the generator builds.
pub const MAX_CORPUS_VERTICES: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CarveStrategy {
    /// One of the other strategies, drawn per graph.
    #[default]
    Mixed,
    /// Discs of random size.
    Random,
    /// Hole perimeters chosen so that `Σ_H (|H| - 3) = |B| - 3`, which makes
    /// `f(G†) = 6`.
    Balanced,
    /// As `Balanced`, with every hole a quadrilateral made of two triangles.
    BalancedQuads,
    /// Quadrilateral holes from a random maximal matching of the remaining
    /// triangles, so no two triangles share an edge and `G` has no TT edge.
    /// Kept only when the holes balance the block as in `Balanced`.
    MaximalQuads,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub max_vertices: usize,
    pub min_vertices: usize,
    pub max_holes: usize,
    pub count: usize,
    pub seed: u64,
    pub strategy: CarveStrategy,
    /// Every entry has exactly one B face. Otherwise graphs with no holes
    /// are triangulated spheres and the others carry one block.
    pub single_block: bool,
    /// Fixed perimeter for carved blocks; random in `4..=|V|` otherwise.
    pub block_perimeter: Option<usize>,
}

impl CorpusConfig {
    pub fn new(max_vertices: usize, max_holes: usize, count: usize, seed: u64) -> Self {
        Self {
            max_vertices,
            min_vertices: 4,
            max_holes,
            count,
            seed,
            strategy: CarveStrategy::Mixed,
            single_block: false,
            block_perimeter: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub graph: FaceGraph,
    pub class: GClass,
    pub digest: GraphDigest,
}

/// Generates up to `count` pairwise non-isomorphic face graphs. Fewer are
/// returned when the space is exhausted (only the tetrahedron has four
/// vertices).
pub fn generate_corpus(config: &CorpusConfig) -> Result<Vec<CorpusEntry>> {
    if config.max_vertices > MAX_CORPUS_VERTICES {
        return Err(Error::SizeBoundExceeded { vertices: config.max_vertices, bound: MAX_CORPUS_VERTICES });
    }
    if config.max_vertices < 4 || config.min_vertices > config.max_vertices {
        return Err(Error::InvalidParameter("vertex range must satisfy 4 <= min <= max"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let attempts = 400 * config.count + 1000;
    for _ in 0..attempts {
        if out.len() >= config.count {
            break;
        }
        let n = rng.gen_range(config.min_vertices.max(4)..=config.max_vertices);
        let sphere = random_sphere(n, &mut rng);
        let holes = rng.gen_range(0..=config.max_holes);
        let strategy = match config.strategy {
            CarveStrategy::Mixed => *[
                CarveStrategy::Random,
                CarveStrategy::Balanced,
                CarveStrategy::BalancedQuads,
                CarveStrategy::MaximalQuads,
            ]
            .choose(&mut rng)
            .unwrap(),
            s => s,
        };
        let blocks = usize::from(config.single_block || holes > 0);
        let Some(graph) = carve(&sphere, blocks, holes, strategy, config.block_perimeter, &mut rng) else {
            continue;
        };
        let digest = face_graph_digest(&graph);
        if !seen.insert(digest) {
            continue;
        }
        let class = classify(&graph)?;
        out.push(CorpusEntry { graph, class, digest });
    }
    Ok(out)
}

/// `(m, n, tight)` with tightness decided by brute force on `G†`.
pub fn classify(g: &FaceGraph) -> Result<GClass> {
    let (m, n) = g.class();
    let tight = check_36(&discus_and_hole(g))?.tight;
    Ok(GClass { m, n, tight })
}

/// Triangulated sphere on `n >= 4` vertices by random vertex splits of `K4`.
pub fn random_sphere<R: Rng>(n: usize, rng: &mut R) -> FaceGraph {
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 3, 1], [1, 3, 2], [0, 2, 3]];
    for w in 4..n {
        let v = rng.gen_range(0..w);
        let rotation = rotation_of(&faces, v);
        let d = rotation.len();
        let i = rng.gen_range(0..d);
        let span = rng.gen_range(1..d);
        // Faces at v between rotation[i] and rotation[i + span] move to w.
        for k in 0..span {
            let (a, b) = (rotation[(i + k) % d], rotation[(i + k + 1) % d]);
            let f = faces
                .iter()
                .position(|f| f.contains(&v) && f.contains(&a) && f.contains(&b))
                .expect("corner face exists");
            for x in faces[f].iter_mut() {
                if *x == v {
                    *x = w;
                }
            }
        }
        let (a, b) = (rotation[i], rotation[(i + span) % d]);
        // Orientations follow the corner order, as the rotation does.
        faces.push([v, a, w]);
        faces.push([w, b, v]);
    }
    let faces = faces.iter().map(|f| Face::new(FaceLabel::T, f.to_vec())).collect();
    FaceGraph::new(n, faces).expect("vertex splits keep a sphere")
}

/// Neighbours of `v` in cyclic order, from oriented triangles.
fn rotation_of(faces: &[[VertexId; 3]], v: VertexId) -> Vec<VertexId> {
    let mut next_of = BTreeMap::new();
    for f in faces {
        if let Some(i) = f.iter().position(|&x| x == v) {
            next_of.insert(f[(i + 1) % 3], f[(i + 2) % 3]);
        }
    }
    let start = *next_of.keys().next().expect("vertex lies on a face");
    let mut out = vec![start];
    let mut cur = next_of[&start];
    while cur != start {
        out.push(cur);
        cur = next_of[&cur];
    }
    out
}

/// Boundary length if `region` is a disc (one simple boundary cycle).
fn disc_perimeter(sphere: &FaceGraph, region: &BTreeSet<usize>) -> Option<usize> {
    let mut count: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for &f in region {
        for e in sphere.face(f).edges() {
            *count.entry(e).or_default() += 1;
        }
    }
    let boundary: Vec<(VertexId, VertexId)> = count.into_iter().filter(|&(_, c)| c == 1).map(|(e, _)| e).collect();
    let mut degree: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(a, b) in &boundary {
        degree.entry(a).or_default().push(b);
        degree.entry(b).or_default().push(a);
    }
    if boundary.is_empty() || degree.values().any(|adj| adj.len() != 2) {
        return None;
    }
    let &start = degree.keys().next()?;
    let (mut prev, mut cur, mut len) = (start, degree[&start][0], 1);
    while cur != start {
        let adj = &degree[&cur];
        let next = if adj[0] == prev { adj[1] } else { adj[0] };
        prev = cur;
        cur = next;
        len += 1;
    }
    (len == boundary.len()).then_some(len)
}

fn face_neighbours(sphere: &FaceGraph, f: usize) -> Vec<usize> {
    sphere
        .face(f)
        .edges()
        .map(|(a, b)| {
            let e = sphere.edge_index(a, b).expect("face edge");
            let [x, y] = sphere.edge_faces(e);
            if x == f {
                y
            } else {
                x
            }
        })
        .collect()
}

/// Grows a disc of unused triangles until its perimeter reaches `target`.
fn grow_disc<R: Rng>(sphere: &FaceGraph, used: &[bool], target: usize, rng: &mut R) -> Option<BTreeSet<usize>> {
    let free: Vec<usize> = (0..used.len()).filter(|&f| !used[f]).collect();
    let &seed = free.choose(rng)?;
    let mut region = BTreeSet::from([seed]);
    let mut perimeter = 3;
    for _ in 0..4 * target + 8 {
        if perimeter == target {
            return Some(region);
        }
        let mut frontier: Vec<usize> = region
            .iter()
            .flat_map(|&f| face_neighbours(sphere, f))
            .filter(|g| !used[*g] && !region.contains(g))
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        frontier.shuffle(rng);
        let mut grown = false;
        for g in frontier {
            region.insert(g);
            match disc_perimeter(sphere, &region) {
                Some(p) if p <= target.max(perimeter) + 1 => {
                    perimeter = p;
                    grown = true;
                    break;
                }
                _ => {
                    region.remove(&g);
                }
            }
        }
        if !grown {
            return None;
        }
    }
    (perimeter == target).then_some(region)
}

/// The quadrilateral made by two triangles across a TT edge.
fn quad_disc<R: Rng>(sphere: &FaceGraph, used: &[bool], rng: &mut R) -> Option<BTreeSet<usize>> {
    let mut pairs: Vec<(usize, usize)> = (0..sphere.edge_count())
        .map(|e| {
            let [a, b] = sphere.edge_faces(e);
            (a, b)
        })
        .filter(|&(a, b)| !used[a] && !used[b])
        .collect();
    pairs.shuffle(rng);
    pairs.into_iter().map(|(a, b)| BTreeSet::from([a, b])).find(|r| disc_perimeter(sphere, r) == Some(4))
}

fn random_composition<R: Rng>(total: usize, parts: usize, rng: &mut R) -> Vec<usize> {
    let mut out = vec![1; parts];
    for _ in 0..total - parts {
        out[rng.gen_range(0..parts)] += 1;
    }
    out
}

fn carve<R: Rng>(
    sphere: &FaceGraph,
    blocks: usize,
    holes: usize,
    strategy: CarveStrategy,
    block_perimeter: Option<usize>,
    rng: &mut R,
) -> Option<FaceGraph> {
    if blocks + holes == 0 {
        return Some(sphere.clone());
    }
    let faces = sphere.faces().len();
    let mut used = vec![false; faces];
    let mut discs: Vec<(FaceLabel, BTreeSet<usize>)> = Vec::new();
    let max_perimeter = (sphere.vertex_count()).max(4);
    let mut take = |label: FaceLabel, region: BTreeSet<usize>, used: &mut Vec<bool>| {
        for &f in &region {
            used[f] = true;
        }
        discs.push((label, region));
    };

    let block_perimeter = block_perimeter.unwrap_or_else(|| rng.gen_range(4..=max_perimeter));
    for _ in 0..blocks {
        let region = grow_disc(sphere, &used, block_perimeter, rng)?;
        take(FaceLabel::B, region, &mut used);
    }
    match strategy {
        CarveStrategy::Random | CarveStrategy::Mixed => {
            for _ in 0..holes {
                let target = rng.gen_range(4..=max_perimeter);
                let region = grow_disc(sphere, &used, target, rng)?;
                take(FaceLabel::H, region, &mut used);
            }
        }
        CarveStrategy::MaximalQuads => {
            let mut pairs: Vec<[usize; 2]> = (0..sphere.edge_count()).map(|e| sphere.edge_faces(e)).collect();
            pairs.shuffle(rng);
            let mut quads = 0;
            for [a, b] in pairs {
                let region = BTreeSet::from([a, b]);
                if !used[a] && !used[b] && disc_perimeter(sphere, &region) == Some(4) {
                    take(FaceLabel::H, region, &mut used);
                    quads += 1;
                }
            }
            if blocks == 1 && quads != block_perimeter - 3 {
                return None;
            }
        }
        CarveStrategy::Balanced | CarveStrategy::BalancedQuads => {
            let budget = if blocks == 1 { block_perimeter - 3 } else { holes };
            let count = holes.min(budget);
            if strategy == CarveStrategy::BalancedQuads {
                for _ in 0..budget {
                    let region = quad_disc(sphere, &used, rng)?;
                    take(FaceLabel::H, region, &mut used);
                }
            } else if count > 0 {
                for excess in random_composition(budget, count, rng) {
                    let region = grow_disc(sphere, &used, excess + 3, rng)?;
                    take(FaceLabel::H, region, &mut used);
                }
            }
        }
    }
    assemble(sphere, &discs).ok()
}

/// Replaces each disc by a single face and deletes interior vertices.
fn assemble(sphere: &FaceGraph, discs: &[(FaceLabel, BTreeSet<usize>)]) -> Result<FaceGraph> {
    let mut in_disc = vec![None; sphere.faces().len()];
    for (i, (_, region)) in discs.iter().enumerate() {
        for &f in region {
            in_disc[f] = Some(i);
        }
    }
    let mut faces: Vec<Face> =
        (0..sphere.faces().len()).filter(|&f| in_disc[f].is_none()).map(|f| sphere.face(f).clone()).collect();
    for (label, region) in discs {
        faces.push(Face::new(*label, boundary_cycle(sphere, region)));
    }
    let mut used: BTreeSet<VertexId> = BTreeSet::new();
    for f in &faces {
        used.extend(f.vertices.iter().copied());
    }
    let new_id: BTreeMap<VertexId, VertexId> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    for f in &mut faces {
        for v in &mut f.vertices {
            *v = new_id[v];
        }
    }
    FaceGraph::new(used.len(), faces)
}

fn boundary_cycle(sphere: &FaceGraph, region: &BTreeSet<usize>) -> Vec<VertexId> {
    let mut count: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for &f in region {
        for e in sphere.face(f).edges() {
            *count.entry(ordered(e.0, e.1)).or_default() += 1;
        }
    }
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (&(a, b), &c) in &count {
        if c == 1 {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    let start = *adj.keys().next().expect("disc has a boundary");
    let mut cycle = vec![start];
    let (mut prev, mut cur) = (start, adj[&start][0]);
    while cur != start {
        cycle.push(cur);
        let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
        prev = cur;
        cur = next;
    }
    cycle
}
