//! Text formats, the `ℓ_p` numerical check, structural property checks and
//! the command line front end built on [`rigidkit_core`].

pub mod cli;
pub mod formats;
pub mod lp;
pub mod properties;

pub use rigidkit_core as core;
