//! Generators for every graph family used by the engine: the example zoo,
//! universal forests and Zykov graphs, the Ramsey-colored complete 5-partite
//! graphs, Borsuk–Hajnal surrogates and their B1/B2 derivatives, and the six
//! extremal two-colored constructions.
//!
//! Every builder is a pure function of (parameters, seed) with fixed
//! lexicographic vertex labeling, so emitted graph6/cg6 is bit-identical
//! across runs.

pub mod borsuk;
pub mod extremal;
pub mod ramsey;
pub mod slots;
pub mod zoo;
pub mod zykov;

pub use borsuk::{b1, b2, bh_surrogate, borsuk_surrogate, BulletAudit};
pub use extremal::{g1, g2, g3, g4, g5, g6};
pub use ramsey::ramsey_k5;
pub use slots::{builtin_slot, mycielski, Provenance, SlotGraph};
pub use zoo::{zoo, zoo_names};
pub use zykov::{universal_forest, zykov};

use crate::bitset::VertexSet;
use crate::colored::TwoColoredGraph;
use crate::graph::Graph;
use serde::Serialize;
use std::collections::BTreeMap;

/// The carrier of a build: plain or red/blue colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildGraph {
    Plain(Graph),
    Colored(TwoColoredGraph),
}

impl BuildGraph {
    pub fn order(&self) -> usize {
        match self {
            BuildGraph::Plain(g) => g.order(),
            BuildGraph::Colored(g) => g.order(),
        }
    }

    pub fn min_degree(&self) -> usize {
        match self {
            BuildGraph::Plain(g) => g.min_degree(),
            BuildGraph::Colored(g) => g.min_degree(),
        }
    }

    pub fn as_colored(&self) -> Option<&TwoColoredGraph> {
        match self {
            BuildGraph::Colored(g) => Some(g),
            BuildGraph::Plain(_) => None,
        }
    }

    pub fn as_plain(&self) -> Option<&Graph> {
        match self {
            BuildGraph::Plain(g) => Some(g),
            BuildGraph::Colored(_) => None,
        }
    }
}

/// What was built and with which parameters/slots; serialized into manifests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionRecipe {
    pub id: String,
    pub parameters: BTreeMap<String, String>,
    pub slots: BTreeMap<String, String>,
}

impl ConstructionRecipe {
    pub fn new(id: impl Into<String>) -> Self {
        ConstructionRecipe {
            id: id.into(),
            parameters: BTreeMap::new(),
            slots: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn slot(mut self, key: &str, value: impl ToString) -> Self {
        self.slots.insert(key.to_string(), value.to_string());
        self
    }
}

/// A built graph with named vertex parts and its recipe.
#[derive(Debug, Clone)]
pub struct LabeledBuild {
    pub graph: BuildGraph,
    pub parts: BTreeMap<String, VertexSet>,
    pub recipe: ConstructionRecipe,
}

impl LabeledBuild {
    /// Parts must partition the vertex set; builders debug-assert through here.
    pub fn parts_partition_vertices(&self) -> bool {
        let n = self.graph.order();
        let mut seen = VertexSet::new(n);
        let mut total = 0;
        for part in self.parts.values() {
            total += part.len();
            seen.union_with(part);
        }
        total == n && seen.len() == n
    }

    pub fn part(&self, name: &str) -> &VertexSet {
        &self.parts[name]
    }
}

/// Helper for consecutive part layouts: returns the sets and the total order.
pub(crate) fn consecutive_parts(sizes: &[(&str, usize)]) -> (BTreeMap<String, VertexSet>, usize) {
    let n: usize = sizes.iter().map(|(_, s)| s).sum();
    let mut parts = BTreeMap::new();
    let mut offset = 0;
    for &(name, size) in sizes {
        parts.insert(name.to_string(), VertexSet::from_iter(n, offset..offset + size));
        offset += size;
    }
    (parts, n)
}

/// Adds every cross edge between two vertex sets.
pub(crate) fn complete_between(
    g: &mut TwoColoredGraph,
    a: &VertexSet,
    b: &VertexSet,
    color: crate::colored::EdgeColor,
) {
    for u in a.iter() {
        for v in b.iter() {
            g.add_edge(u, v, color);
        }
    }
}
