use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("graph is not simple: offending pair ({u},{v})")]
    NotSimple { u: usize, v: usize },
    #[error("graph has {vertices} vertices, above the enumeration bound {bound}")]
    SizeBoundExceeded { vertices: usize, bound: usize },

    #[error("face {face} has fewer than three vertices")]
    FaceTooShort { face: usize },
    #[error("face {face} has a non-simple boundary (repeated vertex)")]
    NonSimpleBoundary { face: usize },
    #[error("face {face} is a triangle but carries a B/H label")]
    LabelledTriangle { face: usize },
    #[error("face {face} is not a triangle but is labelled T")]
    UnlabelledPolygon { face: usize },
    #[error("edge ({u},{v}) lies in {count} faces, expected 2")]
    EdgeFaceCount { u: usize, v: usize, count: usize },
    #[error("Euler characteristic is {characteristic}, expected 2 for a sphere")]
    EulerViolation { characteristic: i64 },
    #[error("the face graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} lies on no face")]
    UnusedVertex { vertex: usize },
    #[error("the faces around vertex {vertex} do not form a single disc")]
    NotManifold { vertex: usize },
    #[error("face orientations cannot be made consistent")]
    NonOrientable,
    #[error("degenerate embedding: the graph is a bare cycle with two non-triangular faces")]
    DegenerateEmbedding,

    #[error("({u},{v}) is not an edge of the graph")]
    UnknownEdge { u: usize, v: usize },
    #[error("vertex sequence is not a simple cycle of the graph")]
    NotACycle,
    #[error("expected exactly {expected} B-labelled face(s), found {found}")]
    BlockCount { expected: usize, found: usize },
    #[error("the cycle bounds a single non-triangular face; the internal face graph is degenerate")]
    DegenerateSplit,
    #[error("edge ({u},{v}) is not a {expected} edge")]
    WrongEdgeClass { u: usize, v: usize, expected: &'static str },
    #[error("edge ({u},{v}) lies in a non-facial 3-cycle")]
    InNonFacialTriangle { u: usize, v: usize },
    #[error("edge ({u},{v}) lies in a 3-cycle")]
    InTriangle { u: usize, v: usize },
    #[error("contracting ({u},{v}) would pinch a face boundary")]
    ContractionPinchesFace { u: usize, v: usize },
    #[error("vertex {w} is not adjacent to {v}")]
    NotAdjacent { v: usize, w: usize },
    #[error("side assignment is not a partition of the remaining neighbours")]
    InvalidPartition,

    #[error("discus-and-hole graph has freedom {freedom}, expected 6")]
    FreedomNot6 { freedom: i64 },
    #[error("not (3,6)-tight: vertex set {witness:?} spans a subgraph of freedom {freedom}")]
    NotTight { witness: Vec<usize>, freedom: i64 },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("cycle enumeration exceeded the cap of {cap} cycles")]
    CycleCapExceeded { cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("orientation covers {found} edges, graph has {expected}")]
    OrientationLength { expected: usize, found: usize },
    #[error("orientation is not a valid outdegree-{k} orientation")]
    InvalidOrientation { k: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("block is not minimally 3-rigid")]
    BlockNotMinimallyRigid,
    #[error("block does not meet the face graph exactly in the boundary cycle")]
    BlockBoundaryMismatch,
    #[error("rigidity matrix needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}
