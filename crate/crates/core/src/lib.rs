//! Combinatorial and algebraic machinery for deciding minimal 3-rigidity of
//! block-and-hole graphs.
//!
//! The crate is `no_std` (it needs `alloc`) and contains no IO. Text formats,
//! floating point checks and the command line front end live in the
//! `rigidkit` crate.
//!
//! The main entry points:
//!
//! * [`graph`]: multigraphs with loops, simple graphs, freedom numbers and
//!   vertex splitting.
//! * [`facegraph`]: planar face graphs with `T`/`B`/`H` labelled faces, critical
//!   separating cycles, edge contractions and the reduction to `K3`.
//! * [`construct`]: simplicial discus, discus-and-hole graphs, general
//!   block-and-hole graphs and looped face graphs.
//! * [`pebble`]: the `(k,l)` pebble game with loops and orientation
//!   certificates.
//! * [`oracle`]: brute force `(3,6)` / `(3,0)` sparsity and corpus generation.
//! * [`numeric`]: exact generic rigidity matrix rank over a 61-bit prime field.
//! * [`origami`]: polyhedral surfaces and their block-and-hole graphs.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod canon;
pub mod construct;
mod error;
pub mod facegraph;
pub mod graph;
pub mod numeric;
pub mod oracle;
pub mod origami;
pub mod pebble;

pub use error::{Error, Result};
pub use graph::{Multigraph, SimpleGraph, VertexId};
