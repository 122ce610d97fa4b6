//! Cops and Robbers with a fast robber.
//!
//! - [`graph`]: immutable graphs, girth, bounded path enumeration, Moore bound
//! - [`catalog`]: verified cubic cages and projective-plane incidence graphs
//! - [`game`]: the rules, robber of speed `t`, cops moving first
//! - [`solver`]: exact cop numbers by attractor computation
//! - [`strategy`]: the witness-maintaining evasion strategy and its bound
//! - [`sim`]: seeded simulations, transcripts and replay

pub mod catalog;
pub mod game;
pub mod graph;
pub mod sim;
pub mod solver;
pub mod strategy;

pub use graph::{Graph, Path, Vertex};
