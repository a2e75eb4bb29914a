//! Forest certificates: canonical components and bipartition sides for an
//! acyclic induced subgraph, or a cycle witness when there is none.
//!
//! Canonical convention used throughout the crate: within each component the
//! smallest-index vertex gets side 0, and the component id is that smallest
//! index. The Zykov side conditions downstream only ever compare sides within
//! one component, so the convention is harmless but makes every emitted
//! certificate deterministic.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::Serialize;

/// Components and bipartition sides of an acyclic induced subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestCertificate {
    /// The vertex subset the certificate covers.
    pub subset: VertexSet,
    /// vertex -> component id (smallest vertex index of its component).
    /// Entries for vertices outside `subset` are unused.
    pub component_of: Vec<u32>,
    /// vertex -> side within its component; smallest vertex of each component
    /// has side 0.
    pub side_of: Vec<u8>,
    /// Number of components.
    pub components: usize,
}

impl ForestCertificate {
    pub fn component(&self, v: usize) -> u32 {
        self.component_of[v]
    }

    pub fn side(&self, v: usize) -> u8 {
        self.side_of[v]
    }

    /// Component ids in increasing order.
    pub fn component_ids(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self.subset.iter().map(|v| self.component_of[v]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }
}

/// Outcome of [`forest_certificate`]: `NotAForest` is a value, not a fault.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForestCheck {
    Forest(ForestCertificate),
    /// A cycle inside the induced subgraph, as a closed vertex sequence
    /// (first == last is implied, not repeated).
    NotAForest { cycle: Vec<usize> },
}

impl ForestCheck {
    pub fn certificate(self) -> Option<ForestCertificate> {
        match self {
            ForestCheck::Forest(c) => Some(c),
            ForestCheck::NotAForest { .. } => None,
        }
    }
}

/// Tests whether the subgraph induced on `s` is acyclic; returns canonical
/// components + bipartition, or a cycle witness.
pub fn forest_certificate(g: &Graph, s: &VertexSet) -> ForestCheck {
    let n = g.order();
    debug_assert_eq!(s.capacity(), n);
    let mut component_of = vec![u32::MAX; n];
    let mut side_of = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    let mut components = 0usize;

    for root in s.iter() {
        if component_of[root] != u32::MAX {
            continue;
        }
        components += 1;
        let comp_id = root as u32; // roots are scanned in increasing order
        component_of[root] = comp_id;
        side_of[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v).iter() {
                if !s.contains(w) || w == parent[v] {
                    continue;
                }
                if component_of[w] != u32::MAX {
                    // Back edge: reconstruct the cycle through parent pointers.
                    return ForestCheck::NotAForest { cycle: recover_cycle(&parent, v, w) };
                }
                component_of[w] = comp_id;
                side_of[w] = side_of[v] ^ 1;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    ForestCheck::Forest(ForestCertificate { subset: s.clone(), component_of, side_of, components })
}

fn recover_cycle(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    // Walk both vertices' ancestor chains to their meeting point.
    let mut ancestors_v = vec![v];
    let mut cur = v;
    while parent[cur] != usize::MAX {
        cur = parent[cur];
        ancestors_v.push(cur);
    }
    let mut path_w = vec![w];
    let mut cur = w;
    while !ancestors_v.contains(&cur) {
        cur = parent[cur];
        path_w.push(cur);
    }
    let meet = cur;
    let mut cycle: Vec<usize> =
        ancestors_v.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    // path_w runs w -> ... -> meet; append it reversed, skipping meet.
    for &x in path_w.iter().rev() {
        if x != meet {
            cycle.push(x);
        }
    }
    cycle
}
