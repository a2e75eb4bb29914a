//! Single-graph recognition: the trichotomy δχ(H) ∈ {0, 1/3, 1/2} for
//! 3-chromatic H, with certificates for every positive decision and
//! exhaustive refutations for the negative ones.
//!
//! Both searches enumerate *maximal* independent sets S and test the
//! remainder F = V∖S. That is complete: if any admissible pair (S, F) exists
//! then every maximal independent superset S' ⊇ S is also admissible — F only
//! shrinks (acyclicity is preserved), splitting a tree preserves
//! one-sidedness of old S-neighborhoods, and a vertex moved out of F leaves
//! its former tree-neighbors in pairwise distinct components.

use crate::bitset::VertexSet;
use crate::chromatic::{chromatic_number, ColoringCert};
use crate::error::Error;
use crate::forest::{forest_certificate, ForestCertificate, ForestCheck};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::search::{Budget, Outcome};
use serde::Serialize;

/// Witness that deleting the independent set `s` leaves a forest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForestDeletionCert {
    pub s: VertexSet,
    pub forest: ForestCertificate,
}

/// Witness of near-acyclicity: `s` independent, H−s a forest, and no vertex
/// of `s` sees both bipartition sides of any single tree component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NearAcyclicCert {
    pub s: VertexSet,
    pub forest: ForestCertificate,
}

/// Marker for an exhausted negative search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RefutationStats {
    /// Maximal independent sets examined.
    pub sets_examined: u64,
    /// Search-tree nodes charged against the budget.
    pub nodes: u64,
}

/// Enumerates maximal independent sets (Bron-Kerbosch with pivoting on the
/// complement). The visitor returns `true` to keep going. Returns `None` on
/// budget exhaustion, otherwise the number of sets visited.
fn for_each_maximal_independent_set(
    g: &Graph,
    budget: &mut Budget,
    f: &mut impl FnMut(&VertexSet) -> bool,
) -> Option<u64> {
    let n = g.order();
    let comp: Vec<VertexSet> = (0..n)
        .map(|v| {
            let mut row = VertexSet::full(n);
            row.subtract(g.neighbors(v));
            row.remove(v);
            row
        })
        .collect();
    let mut count = 0u64;
    let mut r = VertexSet::new(n);
    bk(&comp, &mut r, VertexSet::full(n), VertexSet::new(n), budget, &mut count, f)?;
    Some(count)
}

/// `None` = budget exhausted, `Some(false)` = visitor stopped, `Some(true)` = done.
fn bk(
    comp: &[VertexSet],
    r: &mut VertexSet,
    p: VertexSet,
    x: VertexSet,
    budget: &mut Budget,
    count: &mut u64,
    f: &mut impl FnMut(&VertexSet) -> bool,
) -> Option<bool> {
    if !budget.spend() {
        return None;
    }
    if p.is_empty() && x.is_empty() {
        *count += 1;
        return Some(f(r));
    }
    // Pivot: vertex of P ∪ X covering the most of P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_count(&comp[u]))
        .unwrap();
    let mut candidates = p.clone();
    candidates.subtract(&comp[pivot]);
    let mut p = p;
    let mut x = x;
    for v in candidates.iter() {
        let mut p2 = p.clone();
        p2.intersect_with(&comp[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&comp[v]);
        r.insert(v);
        let sub = bk(comp, r, p2, x2, budget, count, f)?;
        r.remove(v);
        if !sub {
            return Some(false);
        }
        p.remove(v);
        x.insert(v);
    }
    Some(true)
}

fn complement_set(n: usize, s: &VertexSet) -> VertexSet {
    let mut f = VertexSet::full(n);
    f.subtract(s);
    f
}

/// Does some vertex of `s` see both sides of a single tree component of `cert`?
/// Returns the offending vertex if so.
pub fn side_condition_violation(
    g: &Graph,
    s: &VertexSet,
    cert: &ForestCertificate,
) -> Option<usize> {
    for u in s.iter() {
        // Sides seen per touched component, keyed by component id.
        let mut seen: Vec<(u32, u8)> = Vec::new();
        for w in g.neighbors(u).iter() {
            if !cert.subset.contains(w) {
                continue;
            }
            let c = cert.component(w);
            let bit = 1u8 << cert.side(w);
            match seen.iter_mut().find(|(id, _)| *id == c) {
                Some((_, mask)) => *mask |= bit,
                None => seen.push((c, bit)),
            }
        }
        if seen.iter().any(|&(_, mask)| mask == 0b11) {
            return Some(u);
        }
    }
    None
}

/// Is there an independent S ⊆ V(H) with H−S a forest?
pub fn forest_deletion_search(h: &Graph, budget: &mut Budget) -> Outcome<ForestDeletionCert> {
    forest_deletion_with_stats(h, budget).0
}

/// Is H near-acyclic (forest + independent set, every tree one-sided toward S)?
pub fn near_acyclic_search(h: &Graph, budget: &mut Budget) -> Outcome<NearAcyclicCert> {
    near_acyclic_with_stats(h, budget).0
}

pub fn forest_deletion_with_stats(
    h: &Graph,
    budget: &mut Budget,
) -> (Outcome<ForestDeletionCert>, RefutationStats) {
    let n = h.order();
    let start = budget.used();
    let mut found: Option<ForestDeletionCert> = None;
    let visited = for_each_maximal_independent_set(h, budget, &mut |s| {
        let rest = complement_set(n, s);
        if let ForestCheck::Forest(cert) = forest_certificate(h, &rest) {
            found = Some(ForestDeletionCert { s: s.clone(), forest: cert });
            return false;
        }
        true
    });
    let stats = RefutationStats {
        sets_examined: visited.unwrap_or(0),
        nodes: budget.used() - start,
    };
    let outcome = match (found, visited) {
        (Some(cert), _) => Outcome::Yes(cert),
        (None, Some(_)) => Outcome::No,
        (None, None) => Outcome::Undecided,
    };
    (outcome, stats)
}

pub fn near_acyclic_with_stats(
    h: &Graph,
    budget: &mut Budget,
) -> (Outcome<NearAcyclicCert>, RefutationStats) {
    let n = h.order();
    let start = budget.used();
    let mut found: Option<NearAcyclicCert> = None;
    let visited = for_each_maximal_independent_set(h, budget, &mut |s| {
        let rest = complement_set(n, s);
        if let ForestCheck::Forest(cert) = forest_certificate(h, &rest) {
            if side_condition_violation(h, s, &cert).is_none() {
                found = Some(NearAcyclicCert { s: s.clone(), forest: cert });
                return false;
            }
        }
        true
    });
    let stats = RefutationStats {
        sets_examined: visited.unwrap_or(0),
        nodes: budget.used() - start,
    };
    let outcome = match (found, visited) {
        (Some(cert), _) => Outcome::Yes(cert),
        (None, Some(_)) => Outcome::No,
        (None, None) => Outcome::Undecided,
    };
    (outcome, stats)
}

/// Evidence backing a [`SingleThreshold`] value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SingleEvidence {
    /// value = 0
    NearAcyclic(NearAcyclicCert),
    /// value = 1/3: a forest-deletion witness plus the exhausted near-acyclic
    /// refutation.
    ForestDeletion {
        cert: ForestDeletionCert,
        near_acyclic_refutation: RefutationStats,
    },
    /// value = 1/2: forest deletion exhaustively refuted (near-acyclicity is
    /// refuted a fortiori).
    NoForestDeletion { refutation: RefutationStats },
}

/// δχ(H) for a 3-chromatic graph, with certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingleThreshold {
    pub value: Rational,
    pub chi_witness: ColoringCert,
    pub evidence: SingleEvidence,
}

/// Computes δχ(H) ∈ {0, 1/3, 1/2}.
///
/// Errors: `InvalidInput` when χ(H) ≠ 3; `Undecided` when any sub-search ran
/// out of budget.
pub fn single_threshold(h: &Graph, budget: &mut Budget) -> Result<SingleThreshold, Error> {
    let chi = match chromatic_number(h, budget) {
        Outcome::Yes(cert) => cert,
        _ => return Err(Error::Undecided("chromatic number".into())),
    };
    if chi.chi != 3 {
        return Err(Error::InvalidInput(format!(
            "single threshold is defined for 3-chromatic graphs, got chi = {}",
            chi.chi
        )));
    }

    let (na, na_stats) = near_acyclic_with_stats(h, budget);
    match na {
        Outcome::Yes(cert) => {
            return Ok(SingleThreshold {
                value: Rational::ZERO,
                chi_witness: chi,
                evidence: SingleEvidence::NearAcyclic(cert),
            })
        }
        Outcome::Undecided => return Err(Error::Undecided("near-acyclic search".into())),
        Outcome::No => {}
    }

    let (fd, fd_stats) = forest_deletion_with_stats(h, budget);
    match fd {
        Outcome::Yes(cert) => Ok(SingleThreshold {
            value: Rational::new(1, 3),
            chi_witness: chi,
            evidence: SingleEvidence::ForestDeletion { cert, near_acyclic_refutation: na_stats },
        }),
        Outcome::No => Ok(SingleThreshold {
            value: Rational::new(1, 2),
            chi_witness: chi,
            evidence: SingleEvidence::NoForestDeletion { refutation: fd_stats },
        }),
        Outcome::Undecided => Err(Error::Undecided("forest deletion search".into())),
    }
}
