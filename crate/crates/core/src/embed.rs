//! Embeddability emb(H) ∈ {0..4} over the family chain C5 ⊆ Z2 ⊆ Z1 ⊆ Z0.
//!
//! Each family has a finite characterization as a 5-class vertex partition:
//!
//! * classes 2..5 are independent; class 1 is independent (C5) or induces a
//!   forest (Z0, Z1, Z2);
//! * edges may only join consecutive classes mod 5, plus class-1-internal
//!   forest edges where permitted;
//! * "Zykov" pairs — (1,2) for Z1; (1,2) and (1,5) for Z2 — additionally
//!   require every constrained vertex (class 2 and/or 5) to meet at most one
//!   bipartition side of each class-1 tree component. Side choices of class-2
//!   and class-5 vertices are independent.
//!
//! The decision procedure is a backtracking CSP over the 5-class domain in
//! DFS order with forward checking, a rollback union-find with parity
//! maintaining the class-1 forest, and connected components solved
//! independently (no family has cross-component constraints, so emb of a
//! disjoint union is the min over components).

use crate::bitset::VertexSet;
use crate::chromatic::chromatic_number;
use crate::dsu::ParityDsu;
use crate::error::Error;
use crate::forest::{forest_certificate, ForestCertificate, ForestCheck};
use crate::graph::Graph;
use crate::search::{Budget, Outcome};
use serde::Serialize;

/// The four families, in increasing order of embeddability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Family {
    Z0,
    Z1,
    Z2,
    C5,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Z0 => "Z0",
            Family::Z1 => "Z1",
            Family::Z2 => "Z2",
            Family::C5 => "C5",
        }
    }

    /// emb(H) >= level(F) iff H embeds into family F.
    pub fn level(self) -> u8 {
        match self {
            Family::Z0 => 1,
            Family::Z1 => 2,
            Family::Z2 => 3,
            Family::C5 => 4,
        }
    }

    fn class1_may_have_edges(self) -> bool {
        !matches!(self, Family::C5)
    }

    /// Classes whose class-1 neighborhoods are side-constrained.
    fn constrained_classes(self) -> &'static [u8] {
        match self {
            Family::Z1 => &[2],
            Family::Z2 => &[2, 5],
            _ => &[],
        }
    }

    /// Bitmask (bit c-1 = class c) of feasible classes for a neighbor of a
    /// vertex in class `c`. Zykov-restricted pairs stay feasible here; they
    /// are enforced exactly at assignment time.
    fn compat_mask(self, c: u8) -> u8 {
        const fn m(classes: &[u8]) -> u8 {
            let mut out = 0u8;
            let mut i = 0;
            while i < classes.len() {
                out |= 1 << (classes[i] - 1);
                i += 1;
            }
            out
        }
        match (self, c) {
            (Family::C5, 1) => m(&[2, 5]),
            (_, 1) => m(&[1, 2, 5]),
            (_, 2) => m(&[1, 3]),
            (_, 3) => m(&[2, 4]),
            (_, 4) => m(&[3, 5]),
            (_, 5) => m(&[1, 4]),
            _ => unreachable!(),
        }
    }

    /// Start-vertex domain after symmetry breaking. C5 is rotation-invariant;
    /// Z0 and Z2 are invariant under the reflection (2↔5, 3↔4); Z1's single
    /// Zykov pair breaks all class symmetry.
    fn root_domain(self) -> u8 {
        match self {
            Family::C5 => 0b00001,
            Family::Z0 | Family::Z2 => 0b00111,
            Family::Z1 => 0b11111,
        }
    }
}

/// A total assignment of vertices to classes 1..=5.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FivePartition {
    pub class_of: Vec<u8>,
}

impl FivePartition {
    pub fn class_set(&self, class: u8) -> VertexSet {
        VertexSet::from_iter(
            self.class_of.len(),
            self.class_of
                .iter()
                .enumerate()
                .filter(|(_, &c)| c == class)
                .map(|(v, _)| v),
        )
    }
}

/// Homomorphism to C5, written as the induced 5-partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomC5Cert {
    pub partition: FivePartition,
}

/// Membership witness for Z0: classes 2..5 independent, class 1 a forest,
/// all cross edges consecutive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Z0Cert {
    pub partition: FivePartition,
    pub forest: ForestCertificate,
}

/// One (vertex, component, side) entry of a Zykov side assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SideChoice {
    pub vertex: u32,
    pub component: u32,
    pub side: u8,
}

/// Membership witness for Z1 or Z2 (which one is part of the certificate kind).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZykovSideCert {
    pub partition: FivePartition,
    /// Canonical forest structure of class 1.
    pub forest: ForestCertificate,
    /// For every constrained vertex and every class-1 component it touches:
    /// the single canonical side containing its neighborhood there.
    pub side_choice: Vec<SideChoice>,
}

/// CSP over one connected component (vertices relabeled 0..n-1).
struct Csp<'a> {
    g: &'a Graph,
    family: Family,
    order: Vec<usize>,
    class_of: Vec<u8>,
    domain: Vec<u8>,
    dsu: ParityDsu,
    /// Assigned vertices currently in a constrained class.
    constrained: Vec<usize>,
    trail: Vec<(usize, u8)>,
}

impl<'a> Csp<'a> {
    fn new(g: &'a Graph, family: Family) -> Self {
        let n = g.order();
        Csp {
            g,
            family,
            order: dfs_order(g),
            class_of: vec![0; n],
            domain: vec![0b11111; n],
            dsu: ParityDsu::new(n),
            constrained: Vec::new(),
            trail: Vec::new(),
        }
    }

    /// `Some(true)` = assignment found (left in `class_of`), `Some(false)` =
    /// exhausted, `None` = budget spent.
    fn solve(&mut self, budget: &mut Budget) -> Option<bool> {
        if self.g.order() == 0 {
            return Some(true);
        }
        let root = self.order[0];
        self.domain[root] &= self.family.root_domain();
        self.assign_next(0, budget)
    }

    fn assign_next(&mut self, pos: usize, budget: &mut Budget) -> Option<bool> {
        if pos == self.order.len() {
            return Some(true);
        }
        let v = self.order[pos];
        let dom = self.domain[v];
        for c in 1..=5u8 {
            if dom >> (c - 1) & 1 == 0 {
                continue;
            }
            if !budget.spend() {
                return None;
            }
            let trail_mark = self.trail.len();
            let dsu_mark = self.dsu.mark();
            let constrained_mark = self.constrained.len();
            if self.try_assign(v, c) {
                match self.assign_next(pos + 1, budget) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.undo(v, trail_mark, dsu_mark, constrained_mark);
        }
        Some(false)
    }

    fn try_assign(&mut self, v: usize, c: u8) -> bool {
        self.class_of[v] = c;

        // Hard pair rules against already-assigned neighbors, and class-1
        // forest maintenance.
        let mut class1_nbrs = 0usize;
        for w in self.g.neighbors(v).iter() {
            let d = self.class_of[w];
            if d == 0 {
                continue;
            }
            if !self.pair_feasible(c, d) {
                return false;
            }
            if c == 1 && d == 1 {
                if !self.dsu.union(v, w, 1) {
                    return false; // cycle in class 1
                }
                class1_nbrs += 1;
            }
        }

        if self.family.constrained_classes().contains(&c) {
            self.constrained.push(v);
            if self.side_violated(v) {
                return false;
            }
        }
        if c == 1 && !self.family.constrained_classes().is_empty() {
            if class1_nbrs >= 2 {
                // Components may have merged; recheck every constrained vertex.
                for i in 0..self.constrained.len() {
                    if self.side_violated(self.constrained[i]) {
                        return false;
                    }
                }
            } else {
                for w in self.g.neighbors(v).iter() {
                    let d = self.class_of[w];
                    if d != 0 && self.family.constrained_classes().contains(&d) && self.side_violated(w)
                    {
                        return false;
                    }
                }
            }
        }

        // Forward checking on unassigned neighbors.
        let mask = self.family.compat_mask(c);
        for w in self.g.neighbors(v).iter() {
            if self.class_of[w] != 0 {
                continue;
            }
            let old = self.domain[w];
            let new = old & mask;
            if new != old {
                self.trail.push((w, old));
                self.domain[w] = new;
                if new == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Feasibility of an edge between assigned classes (Zykov side conditions
    /// are checked separately).
    fn pair_feasible(&self, a: u8, b: u8) -> bool {
        if a == b {
            return a == 1 && self.family.class1_may_have_edges();
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        matches!((lo, hi), (1, 2) | (2, 3) | (3, 4) | (4, 5) | (1, 5))
    }

    /// Does constrained vertex `u` currently see both parities of one class-1
    /// component?
    fn side_violated(&self, u: usize) -> bool {
        let mut seen: Vec<(usize, u8)> = Vec::new();
        for w in self.g.neighbors(u).iter() {
            if self.class_of[w] != 1 {
                continue;
            }
            let (root, parity) = self.dsu.find(w);
            match seen.iter().find(|(r, _)| *r == root) {
                Some(&(_, p)) => {
                    if p != parity {
                        return true;
                    }
                }
                None => seen.push((root, parity)),
            }
        }
        false
    }

    fn undo(&mut self, v: usize, trail_mark: usize, dsu_mark: usize, constrained_mark: usize) {
        self.class_of[v] = 0;
        while self.trail.len() > trail_mark {
            let (w, old) = self.trail.pop().unwrap();
            self.domain[w] = old;
        }
        self.dsu.rollback(dsu_mark);
        self.constrained.truncate(constrained_mark);
    }
}

/// DFS preorder from the max-degree vertex (ties: smallest index); restarted
/// per component so every later vertex is adjacent to an earlier one whenever
/// possible.
fn dfs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    loop {
        let start = (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
        let Some(start) = start else { break };
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            // Push in reverse so smaller indices are visited first.
            let nbrs: Vec<usize> = g.neighbors(v).iter().filter(|&w| !seen[w]).collect();
            for &w in nbrs.iter().rev() {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    order
}

/// Decides one family on the whole graph by solving components independently.
/// Returns the merged class assignment.
fn solve_family(g: &Graph, family: Family, budget: &mut Budget) -> Outcome<Vec<u8>> {
    let mut class_of = vec![0u8; g.order()];
    let mut undecided = false;
    for comp in g.components() {
        let (sub, labels) = g.induced(&comp);
        let mut csp = Csp::new(&sub, family);
        match csp.solve(budget) {
            Some(true) => {
                for (local, &global) in labels.iter().enumerate() {
                    class_of[global] = csp.class_of[local];
                }
            }
            Some(false) => return Outcome::No,
            None => undecided = true,
        }
    }
    if undecided {
        Outcome::Undecided
    } else {
        Outcome::Yes(class_of)
    }
}

/// Builds the canonical certificate for a satisfying assignment.
fn partition_certificate(g: &Graph, class_of: Vec<u8>, family: Family) -> (FivePartition, ForestCertificate, Vec<SideChoice>) {
    let partition = FivePartition { class_of };
    let class1 = partition.class_set(1);
    let forest = match forest_certificate(g, &class1) {
        ForestCheck::Forest(cert) => cert,
        ForestCheck::NotAForest { .. } => unreachable!("search maintains class-1 acyclicity"),
    };
    let mut side_choice = Vec::new();
    for u in 0..g.order() {
        if !family.constrained_classes().contains(&partition.class_of[u]) {
            continue;
        }
        let mut touched: Vec<(u32, u8)> = Vec::new();
        for w in g.neighbors(u).iter() {
            if partition.class_of[w] == 1 {
                let entry = (forest.component(w), forest.side(w));
                if !touched.contains(&entry) {
                    touched.push(entry);
                }
            }
        }
        touched.sort_unstable();
        for (component, side) in touched {
            side_choice.push(SideChoice { vertex: u as u32, component, side });
        }
    }
    (partition, forest, side_choice)
}

/// H → C5 homomorphism (equivalently H ⊆ some C5 blowup).
pub fn hom_to_c5(h: &Graph, budget: &mut Budget) -> Outcome<HomC5Cert> {
    solve_family(h, Family::C5, budget).map(|class_of| HomC5Cert {
        partition: FivePartition { class_of },
    })
}

/// H ↪ Z0: forest into class 1, everything else a C5-blowup pattern.
pub fn embeds_z0(h: &Graph, budget: &mut Budget) -> Outcome<Z0Cert> {
    solve_family(h, Family::Z0, budget).map(|class_of| {
        let (partition, forest, _) = partition_certificate(h, class_of, Family::Z0);
        Z0Cert { partition, forest }
    })
}

/// H ↪ Z1: pair (1,2) is Zykov-constrained, (1,5)/(2,3)/(3,4)/(4,5) free.
pub fn embeds_z1(h: &Graph, budget: &mut Budget) -> Outcome<ZykovSideCert> {
    solve_family(h, Family::Z1, budget).map(|class_of| {
        let (partition, forest, side_choice) = partition_certificate(h, class_of, Family::Z1);
        ZykovSideCert { partition, forest, side_choice }
    })
}

/// H ↪ Z2: pairs (1,2) and (1,5) Zykov-constrained against the same forest,
/// with independent side choices.
pub fn embeds_z2(h: &Graph, budget: &mut Budget) -> Outcome<ZykovSideCert> {
    solve_family(h, Family::Z2, budget).map(|class_of| {
        let (partition, forest, side_choice) = partition_certificate(h, class_of, Family::Z2);
        ZykovSideCert { partition, forest, side_choice }
    })
}

/// Full embeddability result: the interval [low, high] collapses to a point
/// when every needed sub-decision finishes within budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbResult {
    pub low: u8,
    pub high: u8,
    pub z0: Outcome<Z0Cert>,
    pub z1: Outcome<ZykovSideCert>,
    pub z2: Outcome<ZykovSideCert>,
    pub c5: Outcome<HomC5Cert>,
    /// Families whose refutation is implied by a lower family's direct
    /// exhaustive refutation (hierarchy), rather than searched.
    pub implied_refutations: Vec<Family>,
}

impl EmbResult {
    pub fn exact(&self) -> Option<u8> {
        (self.low == self.high).then_some(self.low)
    }
}

/// Computes emb(H); requires χ(H) = 3.
pub fn embeddability(h: &Graph, budget: &mut Budget) -> Result<EmbResult, Error> {
    match chromatic_number(h, budget) {
        Outcome::Yes(cert) if cert.chi == 3 => {}
        Outcome::Yes(cert) => {
            return Err(Error::InvalidInput(format!(
                "embeddability is defined for 3-chromatic graphs, got chi = {}",
                cert.chi
            )))
        }
        _ => return Err(Error::Undecided("chromatic number".into())),
    }
    Ok(embeddability_unchecked(h, budget))
}

/// The emb computation without the χ = 3 gate (used by tests on arbitrary
/// small graphs and by the gated entry point).
pub fn embeddability_unchecked(h: &Graph, budget: &mut Budget) -> EmbResult {
    let mut implied = Vec::new();

    let z0 = embeds_z0(h, budget);
    if z0.is_no() {
        implied.extend([Family::Z1, Family::Z2, Family::C5]);
        return EmbResult {
            low: 0,
            high: 0,
            z0,
            z1: Outcome::No,
            z2: Outcome::No,
            c5: Outcome::No,
            implied_refutations: implied,
        };
    }
    let z1 = embeds_z1(h, budget);
    if z1.is_no() {
        implied.extend([Family::Z2, Family::C5]);
        let (low, high) = if z0.is_yes() { (1, 1) } else { (0, 1) };
        return EmbResult {
            low,
            high,
            z0,
            z1,
            z2: Outcome::No,
            c5: Outcome::No,
            implied_refutations: implied,
        };
    }
    let z2 = embeds_z2(h, budget);
    if z2.is_no() {
        implied.push(Family::C5);
        let low = if z1.is_yes() { 2 } else if z0.is_yes() { 1 } else { 0 };
        return EmbResult {
            low,
            high: 2,
            z0,
            z1,
            z2,
            c5: Outcome::No,
            implied_refutations: implied,
        };
    }
    let c5 = hom_to_c5(h, budget);

    // Backfill lower Undecideds from any higher Yes: a C5 partition satisfies
    // every Z-family (class-1 components are singleton trees) and a Z2
    // partition satisfies Z1/Z0 because each step only relaxes a pair rule.
    let mut z0 = z0;
    let mut z1 = z1;
    let mut z2 = z2;
    if let Outcome::Yes(hom) = &c5 {
        if z2.is_undecided() {
            let (p, f, s) =
                partition_certificate(h, hom.partition.class_of.clone(), Family::Z2);
            z2 = Outcome::Yes(ZykovSideCert { partition: p, forest: f, side_choice: s });
        }
    }
    if let Outcome::Yes(cert) = &z2 {
        if z1.is_undecided() {
            let (p, f, s) =
                partition_certificate(h, cert.partition.class_of.clone(), Family::Z1);
            z1 = Outcome::Yes(ZykovSideCert { partition: p, forest: f, side_choice: s });
        }
    }
    if let Outcome::Yes(cert) = &z1 {
        if z0.is_undecided() {
            let (p, f, _) = partition_certificate(h, cert.partition.class_of.clone(), Family::Z0);
            z0 = Outcome::Yes(Z0Cert { partition: p, forest: f });
        }
    }

    let low = if c5.is_yes() {
        4
    } else if z2.is_yes() {
        3
    } else if z1.is_yes() {
        2
    } else if z0.is_yes() {
        1
    } else {
        0
    };
    let high = if c5.is_no() { 3 } else { 4 };
    EmbResult { low, high, z0, z1, z2, c5, implied_refutations: implied }
}
