//! Edge-density toolkit for outer k-planar graphs.
//!
//! Vertices are points `0..n` in convex position, in cyclic order; every edge
//! is a straight chord. The crate provides
//!
//! - exact crossing arithmetic on convex chords ([`geometry`]),
//! - the chain and bipartite block constructions ([`constructions`]),
//! - closed-form edge-density and crossing bounds ([`bounds`]),
//! - spectral and exact max-cut tools for circulant graphs ([`circulant`]),
//! - an exact branch-and-bound for small `n` ([`search`]),
//! - the command-line front end ([`cli`]).

pub mod bounds;
pub mod circulant;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod search;

pub use error::{Error, Result};
pub use geometry::{Chord, ConvexGraph};
pub use search::{max_edges, SearchMode, SearchResult};
