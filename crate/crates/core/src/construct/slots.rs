//! Pluggable high-girth / high-chromatic slot graphs.
//!
//! True (k,ℓ)-graphs with both parameters large are beyond desk scale, so
//! slots are pluggable with declared values that are validated against the
//! actual graph on construction: the girth claim exactly, the chromatic claim
//! when χ is computable within budget. Defaults are the cubic cages and
//! Mycielski iterates.

use crate::chromatic::chromatic_number;
use crate::error::Error;
use crate::graph::Graph;
use crate::search::{Budget, Outcome};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    BuiltinCage,
    Mycielski,
    RandomSearch,
    User,
}

/// A slot graph with declared (girth, chromatic) guarantees.
#[derive(Debug, Clone)]
pub struct SlotGraph {
    pub name: String,
    pub graph: Graph,
    pub declared_girth: usize,
    pub declared_chromatic: usize,
    pub provenance: Provenance,
}

impl SlotGraph {
    /// Validates the declarations: `declared_girth` must not exceed the true
    /// girth (forests count as unbounded), and `declared_chromatic` must not
    /// exceed χ whenever χ is decidable within `budget`.
    pub fn new(
        name: impl Into<String>,
        graph: Graph,
        declared_girth: usize,
        declared_chromatic: usize,
        provenance: Provenance,
        budget: &mut Budget,
    ) -> Result<Self, Error> {
        let name = name.into();
        let actual_girth = graph.girth_stats().girth;
        if let Some(g) = actual_girth {
            if declared_girth > g {
                return Err(Error::SlotViolation(format!(
                    "slot {name}: declared girth {declared_girth} exceeds actual girth {g}"
                )));
            }
        }
        if let Outcome::Yes(cert) = chromatic_number(&graph, budget) {
            if declared_chromatic > cert.chi {
                return Err(Error::SlotViolation(format!(
                    "slot {name}: declared chromatic {declared_chromatic} exceeds actual {}",
                    cert.chi
                )));
            }
        }
        Ok(SlotGraph { name, graph, declared_girth, declared_chromatic, provenance })
    }

    pub fn describe(&self) -> String {
        format!(
            "{}(n={}, girth>={}, chi>={})",
            self.name,
            self.graph.order(),
            self.declared_girth,
            self.declared_chromatic
        )
    }
}

/// Hamilton cycle plus LCF chords.
fn lcf(order: usize, pattern: &[i64], repeats: usize) -> Graph {
    assert_eq!(pattern.len() * repeats, order);
    let mut g = Graph::cycle(order);
    for v in 0..order {
        let jump = pattern[v % pattern.len()];
        let w = (v as i64 + jump).rem_euclid(order as i64) as usize;
        g.add_edge(v, w);
    }
    g
}

/// The 24-vertex cubic cage of girth 7.
pub fn mcgee() -> Graph {
    lcf(24, &[12, 7, -7], 8)
}

/// The 30-vertex cubic cage of girth 8 (bipartite).
pub fn tutte_coxeter() -> Graph {
    lcf(30, &[-13, -9, 7, -7, 9, 13], 5)
}

/// Mycielski construction: preserves triangle-freeness, raises χ by one.
/// Vertices: originals 0..n-1, shadows n..2n-1, apex 2n.
pub fn mycielski(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::empty(2 * n + 1);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
        out.add_edge(n + u, v);
        out.add_edge(u, n + v);
    }
    for v in 0..n {
        out.add_edge(n + v, 2 * n);
    }
    out
}

/// The 11-vertex triangle-free graph with χ = 4 (second Mycielski iterate
/// of an edge).
pub fn grotzsch() -> Graph {
    mycielski(&Graph::cycle(5))
}

fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Built-in slots by name: `petersen`, `mcgee`, `tutte_coxeter`, `grotzsch`.
pub fn builtin_slot(name: &str) -> Result<SlotGraph, Error> {
    let mut budget = Budget::default();
    match name {
        "petersen" => SlotGraph::new("petersen", petersen(), 5, 3, Provenance::BuiltinCage, &mut budget),
        "mcgee" => SlotGraph::new("mcgee", mcgee(), 7, 3, Provenance::BuiltinCage, &mut budget),
        "tutte_coxeter" => SlotGraph::new(
            "tutte_coxeter",
            tutte_coxeter(),
            8,
            2,
            Provenance::BuiltinCage,
            &mut budget,
        ),
        "grotzsch" => {
            SlotGraph::new("grotzsch", grotzsch(), 4, 4, Provenance::Mycielski, &mut budget)
        }
        other => Err(Error::InvalidArgument(format!("unknown builtin slot {other:?}"))),
    }
}
