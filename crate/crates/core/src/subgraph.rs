//! Non-induced subgraph containment by pruned backtracking.
//!
//! Pattern vertices are ordered most-constrained-first (max adjacency to the
//! already-ordered prefix, ties by degree), and host candidates are filtered
//! by degree and by bitset intersection of the rows of already-mapped
//! neighbors. `No` is only returned after the pruned search has exhausted the
//! space; running out of budget surfaces as `Undecided`, never as `No`.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::search::{Budget, Outcome};
use serde::Serialize;

/// An injective vertex map preserving all pattern edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// pattern vertex -> host vertex
    pub map: Vec<u32>,
}

impl Embedding {
    /// Direct edge-by-edge re-check, independent of the search.
    pub fn check(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut seen = VertexSet::new(host.order());
        for &img in &self.map {
            let img = img as usize;
            if img >= host.order() || seen.contains(img) {
                return false;
            }
            seen.insert(img);
        }
        pattern
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(self.map[u] as usize, self.map[v] as usize))
    }
}

/// Searches `host` for a copy of `pattern` (not necessarily induced).
pub fn contains_subgraph(host: &Graph, pattern: &Graph, budget: &mut Budget) -> Outcome<Embedding> {
    let np = pattern.order();
    let nh = host.order();
    if np == 0 {
        return Outcome::Yes(Embedding { map: Vec::new() });
    }
    if np > nh {
        return Outcome::No;
    }

    let order = matching_order(pattern);
    // Earlier ordered positions adjacent to each position.
    let back_edges: Vec<Vec<usize>> = (0..np)
        .map(|i| {
            (0..i)
                .filter(|&j| pattern.has_edge(order[i], order[j]))
                .collect()
        })
        .collect();
    // Degree-feasible host vertices per position.
    let base: Vec<VertexSet> = (0..np)
        .map(|i| {
            let need = pattern.degree(order[i]);
            VertexSet::from_iter(nh, (0..nh).filter(|&u| host.degree(u) >= need))
        })
        .collect();

    let mut mapped = vec![0u32; np];
    let mut used = VertexSet::new(nh);
    let found = extend(
        host,
        &order,
        &back_edges,
        &base,
        0,
        &mut mapped,
        &mut used,
        budget,
    );
    match found {
        Some(true) => {
            let mut map = vec![0u32; np];
            for (pos, &pv) in order.iter().enumerate() {
                map[pv] = mapped[pos];
            }
            let emb = Embedding { map };
            debug_assert!(emb.check(host, pattern));
            Outcome::Yes(emb)
        }
        Some(false) => Outcome::No,
        None => Outcome::Undecided,
    }
}

/// `Some(true)` found, `Some(false)` exhausted, `None` out of budget.
#[allow(clippy::too_many_arguments)]
fn extend(
    host: &Graph,
    order: &[usize],
    back_edges: &[Vec<usize>],
    base: &[VertexSet],
    pos: usize,
    mapped: &mut [u32],
    used: &mut VertexSet,
    budget: &mut Budget,
) -> Option<bool> {
    if pos == order.len() {
        return Some(true);
    }
    let mut cand = base[pos].clone();
    cand.subtract(used);
    for &earlier in &back_edges[pos] {
        cand.intersect_with(host.neighbors(mapped[earlier] as usize));
    }
    for u in cand.iter() {
        if !budget.spend() {
            return None;
        }
        mapped[pos] = u as u32;
        used.insert(u);
        let sub = extend(host, order, back_edges, base, pos + 1, mapped, used, budget);
        used.remove(u);
        match sub {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
    }
    Some(false)
}

/// Most-constrained-first ordering: seed with the max-degree vertex, then
/// repeatedly take the vertex with the most ordered neighbors (ties: higher
/// degree, then smaller index). Keeps connected patterns connected along the
/// prefix so candidate sets stay small.
fn matching_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut ordered_nbrs = vec![0usize; n];
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (ordered_nbrs[v], pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[pick] = true;
        order.push(pick);
        for w in pattern.neighbors(pick).iter() {
            ordered_nbrs[w] += 1;
        }
    }
    order
}
