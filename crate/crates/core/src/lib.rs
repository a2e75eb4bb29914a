//! Decision engine for two-color chromatic thresholds of 3-chromatic graph
//! pairs, with machine-checkable certificates and desk-scale extremal
//! constructions.
//!
//! The crate is organized around five layers:
//!
//! * [`graph`] / [`graph6`] / [`colored`] — the deterministic graph substrate
//!   (bitset adjacency, combinators, bit-exact graph6 / cg6 serialization);
//! * [`recognition`] — the single-graph trichotomy δχ(H) ∈ {0, 1/3, 1/2};
//! * [`embed`] — the embeddability parameter emb(H) ∈ {0..4} over the
//!   C5 ⊆ Z2 ⊆ Z1 ⊆ Z0 family chain;
//! * [`classify`] — the pair classifier δχ(H1,H2) ∈ {2/3, 5/7, 3/4, 7/9, 4/5}
//!   with a full decision trace;
//! * [`construct`] / [`verify`] — generators for the extremal families and
//!   independent re-checking of every certificate and freeness claim.
//!
//! Every NP-hard query returns a tri-state [`search::Outcome`]: `Yes` carries
//! a certificate, `No` is only reported after exhaustive search, and budget
//! exhaustion surfaces as `Undecided`, never as a silent negative.

pub mod bitset;
pub mod cert;
pub mod chromatic;
pub mod classify;
pub mod colored;
pub mod construct;
pub mod dsu;
pub mod embed;
pub mod error;
pub mod forest;
pub mod graph;
pub mod graph6;
pub mod rational;
pub mod recognition;
pub mod search;
pub mod subgraph;
pub mod trees;
pub mod verify;

#[cfg(feature = "testkit")]
pub mod testkit;

pub use bitset::VertexSet;
pub use classify::{pair_threshold, Branch, DecisionTrace, ThresholdValue};
pub use colored::TwoColoredGraph;
pub use embed::{embeddability, EmbResult};
pub use error::Error;
pub use graph::Graph;
pub use rational::Rational;
pub use recognition::{single_threshold, SingleThreshold};
pub use search::{Budget, Outcome};

/// Hard cap on graph order accepted by parsers and generators.
///
/// Desk-scale constructions top out near 200 vertices (G2/G3 at n ≈ 190,
/// B1/B2 instances); the cap leaves generous headroom while keeping
/// accidental huge inputs from exhausting memory.
pub const N_MAX: usize = 1024;
