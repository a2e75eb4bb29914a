//! Exact chromatic number by saturation-ordered branch and bound.
//!
//! k-colorability is decided for k = 1, 2 directly (edgeless / bipartite) and
//! for k >= 3 by backtracking: always branch on the uncolored vertex seeing
//! the most distinct neighbor colors, and never open more than one fresh
//! color per node (color-symmetry breaking). χ is the first feasible k, with
//! k−1 infeasible by the exhausted search that preceded it.

use crate::graph::Graph;
use crate::search::{Budget, Outcome};
use serde::Serialize;

/// A proper coloring using exactly `chi` colors 0..chi-1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringCert {
    pub chi: usize,
    pub colors: Vec<u8>,
}

impl ColoringCert {
    /// Direct scan: proper, in range, and all `chi` colors used.
    pub fn check(&self, g: &Graph) -> bool {
        if self.colors.len() != g.order() {
            return false;
        }
        if self.colors.iter().any(|&c| c as usize >= self.chi) {
            return false;
        }
        let mut used = vec![false; self.chi];
        for &c in &self.colors {
            used[c as usize] = true;
        }
        if !used.iter().all(|&u| u) {
            return false;
        }
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Exact chromatic number with a witness coloring.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Outcome<ColoringCert> {
    let n = g.order();
    if n == 0 {
        return Outcome::Yes(ColoringCert { chi: 0, colors: Vec::new() });
    }
    if g.edge_count() == 0 {
        return Outcome::Yes(ColoringCert { chi: 1, colors: vec![0; n] });
    }
    if let Some(two) = g.bipartition() {
        // Bipartite with at least one edge: both colors are used.
        return Outcome::Yes(ColoringCert { chi: 2, colors: two });
    }
    for k in 3..=n {
        match colorable(g, k, budget) {
            Some(Some(colors)) => return Outcome::Yes(ColoringCert { chi: k, colors }),
            Some(None) => continue,
            None => return Outcome::Undecided,
        }
    }
    unreachable!("every graph is n-colorable");
}

/// Decides whether χ(g) <= k. `None` = budget exhausted.
pub fn colorable(g: &Graph, k: usize, budget: &mut Budget) -> Option<Option<Vec<u8>>> {
    let n = g.order();
    let mut colors = vec![u8::MAX; n];
    if branch(g, k, &mut colors, 0, budget) {
        Some(Some(colors))
    } else if budget.exhausted() {
        None
    } else {
        Some(None)
    }
}

fn branch(g: &Graph, k: usize, colors: &mut [u8], colored: usize, budget: &mut Budget) -> bool {
    let n = g.order();
    if colored == n {
        return true;
    }
    // Saturation-first vertex selection.
    let mut pick = usize::MAX;
    let mut best = (0usize, 0usize);
    for v in 0..n {
        if colors[v] != u8::MAX {
            continue;
        }
        let mut mask = 0u64;
        for w in g.neighbors(v).iter() {
            if colors[w] != u8::MAX {
                mask |= 1 << colors[w];
            }
        }
        let key = (mask.count_ones() as usize, g.degree(v));
        if pick == usize::MAX || key > best {
            pick = v;
            best = key;
        }
    }
    let mut forbidden = 0u64;
    for w in g.neighbors(pick).iter() {
        if colors[w] != u8::MAX {
            forbidden |= 1 << colors[w];
        }
    }
    let max_used = colors
        .iter()
        .filter(|&&c| c != u8::MAX)
        .map(|&c| c as usize + 1)
        .max()
        .unwrap_or(0);
    // At most one previously unused color needs trying.
    let limit = k.min(max_used + 1);
    for c in 0..limit {
        if forbidden >> c & 1 != 0 {
            continue;
        }
        if !budget.spend() {
            return false;
        }
        colors[pick] = c as u8;
        if branch(g, k, colors, colored + 1, budget) {
            return true;
        }
        colors[pick] = u8::MAX;
        if budget.exhausted() {
            return false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::blowup;

    fn chi(g: &Graph) -> usize {
        match chromatic_number(g, &mut Budget::default()) {
            Outcome::Yes(cert) => {
                assert!(cert.check(g));
                cert.chi
            }
            other => panic!("undecidable: {other:?}"),
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(chi(&Graph::empty(0)), 0);
        assert_eq!(chi(&Graph::empty(4)), 1);
        assert_eq!(chi(&Graph::path(5)), 2);
        assert_eq!(chi(&Graph::cycle(5)), 3);
        assert_eq!(chi(&Graph::complete(5)), 5);
    }

    #[test]
    fn blowup_preserves_chi_of_k3() {
        let k3b = blowup(&Graph::complete(3), 2).unwrap();
        assert_eq!(chi(&k3b), 3);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        assert_eq!(chi(&g), 3);
    }

    #[test]
    fn budget_exhaustion() {
        let g = blowup(&Graph::complete(3), 3).unwrap();
        assert_eq!(chromatic_number(&g, &mut Budget::new(2)), Outcome::Undecided);
    }
}
