//! Independent checking: certificate re-verification, monochromatic freeness
//! of constructions, and exact minimum-degree audits.
//!
//! The verifier shares no search code with the producers: every check is a
//! direct scan of the certificate against the graph. Rejections carry the
//! first violated invariant.

use crate::bitset::VertexSet;
use crate::cert::Certificate;
use crate::chromatic::ColoringCert;
use crate::classify::{Branch, DecisionTrace};
use crate::colored::TwoColoredGraph;
use crate::embed::{EmbResult, FivePartition, ZykovSideCert};
use crate::forest::ForestCertificate;
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::rational::Rational;
use crate::recognition::{SingleEvidence, SingleThreshold};
use crate::search::{Budget, Outcome};
use crate::subgraph::{contains_subgraph, Embedding};
use serde::Serialize;
use thiserror::Error;

/// First violated invariant found by the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum Rejection {
    #[error("S is not independent: contains edge {u}-{v}")]
    SNotIndependent { u: usize, v: usize },
    #[error("certificate subset does not match the expected vertex set")]
    SubsetMismatch,
    #[error("edge {u}-{v} joins different components")]
    ComponentMismatch { u: usize, v: usize },
    #[error("edge {u}-{v} joins vertices on the same side")]
    SameSideEdge { u: usize, v: usize },
    #[error("edge count {edges} does not equal order {order} minus components {components}")]
    NotAcyclic { edges: usize, order: usize, components: usize },
    #[error("component labeling or sides are not canonical at vertex {vertex}")]
    NotCanonical { vertex: usize },
    #[error("vertex {vertex} of S has neighbors on both sides of one tree component")]
    SideConditionViolated { vertex: usize },
    #[error("vertex {vertex} has class {class}, outside 1..=5")]
    ClassOutOfRange { vertex: usize, class: u8 },
    #[error("edge {u}-{v} joins classes {cu} and {cv}, which is not permitted")]
    EdgePairForbidden { u: usize, v: usize, cu: u8, cv: u8 },
    #[error("constrained vertex {vertex} has no side choice for component {component}")]
    MissingSideChoice { vertex: usize, component: u32 },
    #[error("side choice for vertex {vertex}, component {component} does not cover its neighbors")]
    SideChoiceWrong { vertex: usize, component: u32 },
    #[error("embedding is not injective or out of range at pattern vertex {vertex}")]
    NotInjective { vertex: usize },
    #[error("pattern edge {u}-{v} is not preserved by the embedding")]
    EdgeNotPreserved { u: usize, v: usize },
    #[error("coloring is improper on edge {u}-{v}")]
    ImproperColoring { u: usize, v: usize },
    #[error("coloring does not use exactly the declared number of colors")]
    WrongColorCount,
    #[error("threshold value does not match its evidence kind")]
    ValueEvidenceMismatch,
    #[error("trace branch is inconsistent with emb values and eta")]
    TraceBranchMismatch,
    #[error("trace value does not match its branch")]
    TraceValueMismatch,
    #[error("trace eta is not the max of the single thresholds")]
    TraceEtaMismatch,
    #[error("trace emb values are inconsistent with the attached evidence")]
    TraceEmbMismatch,
    #[error("embedded pattern line failed to parse: {0}")]
    BadPattern(String),
}

/// Re-checks a certificate against a graph by direct scan.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<(), Rejection> {
    match cert {
        Certificate::ProperColoring(c) => check_coloring(g, c),
        Certificate::Forest(f) => check_forest(g, f),
        Certificate::ForestDeletion(fd) => {
            check_deletion(g, &fd.s, &fd.forest)?;
            Ok(())
        }
        Certificate::NearAcyclic(na) => {
            check_deletion(g, &na.s, &na.forest)?;
            check_side_condition(g, &na.s, &na.forest)
        }
        Certificate::HomC5(hom) => check_partition(g, &hom.partition, PairRules::C5, None),
        Certificate::Z0(z) => check_partition(g, &z.partition, PairRules::Z0, Some(&z.forest)),
        Certificate::Z1(z) => check_zykov(g, z, PairRules::Z1),
        Certificate::Z2(z) => check_zykov(g, z, PairRules::Z2),
        Certificate::Embedding { pattern_g6, embedding } => {
            let pattern =
                parse_graph6(pattern_g6).map_err(|e| Rejection::BadPattern(e.to_string()))?;
            check_embedding(g, &pattern, embedding)
        }
        Certificate::SingleThreshold(t) => check_single_threshold(g, t),
    }
}

fn check_coloring(g: &Graph, c: &ColoringCert) -> Result<(), Rejection> {
    if c.colors.len() != g.order() {
        return Err(Rejection::WrongColorCount);
    }
    let mut used = vec![false; c.chi];
    for &col in &c.colors {
        if col as usize >= c.chi {
            return Err(Rejection::WrongColorCount);
        }
        used[col as usize] = true;
    }
    if !used.iter().all(|&u| u) {
        return Err(Rejection::WrongColorCount);
    }
    for (u, v) in g.edges() {
        if c.colors[u] == c.colors[v] {
            return Err(Rejection::ImproperColoring { u, v });
        }
    }
    Ok(())
}

/// Forest-certificate invariants: every induced edge joins same component and
/// opposite sides; edge count = order − components; ids and sides canonical
/// (component id = smallest member, which has side 0).
fn check_forest(g: &Graph, f: &ForestCertificate) -> Result<(), Rejection> {
    let sub = &f.subset;
    let mut edges = 0usize;
    for u in sub.iter() {
        for v in g.neighbors(u).iter() {
            if v <= u || !sub.contains(v) {
                continue;
            }
            edges += 1;
            if f.component(u) != f.component(v) {
                return Err(Rejection::ComponentMismatch { u, v });
            }
            if f.side(u) == f.side(v) {
                return Err(Rejection::SameSideEdge { u, v });
            }
        }
    }
    let ids = f.component_ids();
    if edges != sub.len() - ids.len() {
        return Err(Rejection::NotAcyclic { edges, order: sub.len(), components: ids.len() });
    }
    if f.components != ids.len() {
        return Err(Rejection::NotAcyclic { edges, order: sub.len(), components: ids.len() });
    }
    // Canonical ids and sides: the smallest vertex of each component is its
    // id and sits on side 0; ids must be members of their own component.
    for &id in &ids {
        let members: Vec<usize> = sub.iter().filter(|&v| f.component(v) == id).collect();
        let min = *members.first().expect("ids come from members");
        if min as u32 != id || f.side(min) != 0 {
            return Err(Rejection::NotCanonical { vertex: min });
        }
    }
    Ok(())
}

/// Shared S/forest checks for deletion-style certificates.
fn check_deletion(g: &Graph, s: &VertexSet, forest: &ForestCertificate) -> Result<(), Rejection> {
    for u in s.iter() {
        for v in g.neighbors(u).iter() {
            if v > u && s.contains(v) {
                return Err(Rejection::SNotIndependent { u, v });
            }
        }
    }
    let mut expected = VertexSet::full(g.order());
    expected.subtract(s);
    if forest.subset != expected {
        return Err(Rejection::SubsetMismatch);
    }
    check_forest(g, forest)
}

fn check_side_condition(
    g: &Graph,
    s: &VertexSet,
    forest: &ForestCertificate,
) -> Result<(), Rejection> {
    match crate::recognition::side_condition_violation(g, s, forest) {
        Some(vertex) => Err(Rejection::SideConditionViolated { vertex }),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum PairRules {
    C5,
    Z0,
    Z1,
    Z2,
}

impl PairRules {
    /// Cross-pair status: 0 forbidden, 1 free, 2 Zykov-constrained.
    fn cross(self, a: u8, b: u8) -> u8 {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let consecutive = matches!((lo, hi), (1, 2) | (2, 3) | (3, 4) | (4, 5) | (1, 5));
        if !consecutive {
            return 0;
        }
        match self {
            PairRules::C5 | PairRules::Z0 => 1,
            PairRules::Z1 => {
                if (lo, hi) == (1, 2) {
                    2
                } else {
                    1
                }
            }
            PairRules::Z2 => {
                if (lo, hi) == (1, 2) || (lo, hi) == (1, 5) {
                    2
                } else {
                    1
                }
            }
        }
    }

    fn class1_edges_allowed(self) -> bool {
        !matches!(self, PairRules::C5)
    }

    fn constrained(self, class: u8) -> bool {
        match self {
            PairRules::Z1 => class == 2,
            PairRules::Z2 => class == 2 || class == 5,
            _ => false,
        }
    }
}

/// Partition legality: classes in range, same-class edges only inside class 1
/// where allowed, cross edges only on permitted pairs. The class-1 forest is
/// checked against `forest` when given.
fn check_partition(
    g: &Graph,
    p: &FivePartition,
    rules: PairRules,
    forest: Option<&ForestCertificate>,
) -> Result<(), Rejection> {
    if p.class_of.len() != g.order() {
        return Err(Rejection::SubsetMismatch);
    }
    for (v, &c) in p.class_of.iter().enumerate() {
        if !(1..=5).contains(&c) {
            return Err(Rejection::ClassOutOfRange { vertex: v, class: c });
        }
    }
    for (u, v) in g.edges() {
        let (cu, cv) = (p.class_of[u], p.class_of[v]);
        if cu == cv {
            if cu != 1 || !rules.class1_edges_allowed() {
                return Err(Rejection::EdgePairForbidden { u, v, cu, cv });
            }
        } else if rules.cross(cu, cv) == 0 {
            return Err(Rejection::EdgePairForbidden { u, v, cu, cv });
        }
    }
    if let Some(f) = forest {
        if f.subset != p.class_set(1) {
            return Err(Rejection::SubsetMismatch);
        }
        check_forest(g, f)?;
    }
    Ok(())
}

/// Full Zykov-side certificate check (Z1 or Z2).
fn check_zykov(g: &Graph, cert: &ZykovSideCert, rules: PairRules) -> Result<(), Rejection> {
    check_partition(g, &cert.partition, rules, Some(&cert.forest))?;
    // Every constrained vertex must have one declared side per touched
    // component, and its neighborhood there must lie inside that side.
    for (u, &cu) in cert.partition.class_of.iter().enumerate() {
        if !rules.constrained(cu) {
            continue;
        }
        let mut touched: Vec<u32> = g
            .neighbors(u)
            .iter()
            .filter(|&w| cert.partition.class_of[w] == 1)
            .map(|w| cert.forest.component(w))
            .collect();
        touched.sort_unstable();
        touched.dedup();
        for comp in touched {
            let choice = cert
                .side_choice
                .iter()
                .find(|sc| sc.vertex as usize == u && sc.component == comp)
                .ok_or(Rejection::MissingSideChoice { vertex: u, component: comp })?;
            let all_inside = g
                .neighbors(u)
                .iter()
                .filter(|&w| cert.partition.class_of[w] == 1 && cert.forest.component(w) == comp)
                .all(|w| cert.forest.side(w) == choice.side);
            if !all_inside || choice.side > 1 {
                return Err(Rejection::SideChoiceWrong { vertex: u, component: comp });
            }
        }
    }
    Ok(())
}

fn check_embedding(host: &Graph, pattern: &Graph, emb: &Embedding) -> Result<(), Rejection> {
    if emb.map.len() != pattern.order() {
        return Err(Rejection::NotInjective { vertex: emb.map.len() });
    }
    let mut seen = VertexSet::new(host.order());
    for (pv, &img) in emb.map.iter().enumerate() {
        let img = img as usize;
        if img >= host.order() || seen.contains(img) {
            return Err(Rejection::NotInjective { vertex: pv });
        }
        seen.insert(img);
    }
    for (u, v) in pattern.edges() {
        if !host.has_edge(emb.map[u] as usize, emb.map[v] as usize) {
            return Err(Rejection::EdgeNotPreserved { u, v });
        }
    }
    Ok(())
}

fn check_single_threshold(g: &Graph, t: &SingleThreshold) -> Result<(), Rejection> {
    if t.chi_witness.chi != 3 {
        return Err(Rejection::ValueEvidenceMismatch);
    }
    check_coloring(g, &t.chi_witness)?;
    match &t.evidence {
        SingleEvidence::NearAcyclic(cert) => {
            if t.value != Rational::ZERO {
                return Err(Rejection::ValueEvidenceMismatch);
            }
            check_deletion(g, &cert.s, &cert.forest)?;
            check_side_condition(g, &cert.s, &cert.forest)
        }
        SingleEvidence::ForestDeletion { cert, .. } => {
            if t.value != Rational::new(1, 3) {
                return Err(Rejection::ValueEvidenceMismatch);
            }
            check_deletion(g, &cert.s, &cert.forest)
        }
        SingleEvidence::NoForestDeletion { .. } => {
            if t.value != Rational::new(1, 2) {
                return Err(Rejection::ValueEvidenceMismatch);
            }
            Ok(())
        }
    }
}

/// Consistency of an embeddability result with its certificates, against `g`.
pub fn verify_emb_result(g: &Graph, e: &EmbResult) -> Result<(), Rejection> {
    if let Outcome::Yes(c) = &e.z0 {
        verify_certificate(g, &Certificate::Z0(c.clone()))?;
    }
    if let Outcome::Yes(c) = &e.z1 {
        verify_certificate(g, &Certificate::Z1(c.clone()))?;
    }
    if let Outcome::Yes(c) = &e.z2 {
        verify_certificate(g, &Certificate::Z2(c.clone()))?;
    }
    if let Outcome::Yes(c) = &e.c5 {
        verify_certificate(g, &Certificate::HomC5(c.clone()))?;
    }
    let claimed_low = match (&e.c5, &e.z2, &e.z1, &e.z0) {
        (Outcome::Yes(_), ..) => 4,
        (_, Outcome::Yes(_), ..) => 3,
        (_, _, Outcome::Yes(_), _) => 2,
        (_, _, _, Outcome::Yes(_)) => 1,
        _ => 0,
    };
    if e.low != claimed_low {
        return Err(Rejection::TraceEmbMismatch);
    }
    Ok(())
}

/// Re-checks a decision trace against the pair of graphs it classified.
/// `h1`, `h2` are in the caller's original order; the trace records whether
/// it swapped them.
pub fn verify_trace(h1: &Graph, h2: &Graph, t: &DecisionTrace) -> Result<(), Rejection> {
    let (g_lo, g_hi) = if t.swapped { (h2, h1) } else { (h1, h2) };
    let (e_lo, e_hi) = (&t.emb_detail.0, &t.emb_detail.1);
    let (t_lo, t_hi) = (&t.threshold_detail.0, &t.threshold_detail.1);

    verify_emb_result(g_lo, e_lo)?;
    verify_emb_result(g_hi, e_hi)?;
    verify_certificate(g_lo, &Certificate::SingleThreshold(t_lo.clone()))?;
    verify_certificate(g_hi, &Certificate::SingleThreshold(t_hi.clone()))?;

    if e_lo.exact() != Some(t.emb1) || e_hi.exact() != Some(t.emb2) || t.emb1 > t.emb2 {
        return Err(Rejection::TraceEmbMismatch);
    }
    if t.eta != t_lo.value.max(t_hi.value) {
        return Err(Rejection::TraceEtaMismatch);
    }
    let expected_branch = if t.emb2 == 4 || (t.emb1 == 3 && t.emb2 == 3) {
        if t.eta == Rational::new(1, 2) {
            Branch::EtaHalf
        } else if t.eta == Rational::new(1, 3) {
            Branch::EtaThird
        } else {
            Branch::EtaZero
        }
    } else {
        match t.emb1 {
            0 => Branch::EmbZero,
            1 => Branch::EmbOne,
            2 => Branch::EmbTwo,
            _ => return Err(Rejection::TraceBranchMismatch),
        }
    };
    if t.branch != expected_branch {
        return Err(Rejection::TraceBranchMismatch);
    }
    if t.value != t.branch.value() {
        return Err(Rejection::TraceValueMismatch);
    }
    Ok(())
}

/// Freeness report: does either color class contain its forbidden pattern?
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessReport {
    pub host_order: usize,
    pub red_pattern_order: usize,
    pub blue_pattern_order: usize,
    pub red_result: Outcome<Embedding>,
    pub blue_result: Outcome<Embedding>,
    pub budget_used: u64,
}

impl FreenessReport {
    /// Both searches exhausted with no copy found.
    pub fn is_free(&self) -> bool {
        self.red_result.is_no() && self.blue_result.is_no()
    }

    pub fn undecided(&self) -> bool {
        self.red_result.is_undecided() || self.blue_result.is_undecided()
    }
}

/// Searches the red subgraph for h1 and the blue subgraph for h2. Any found
/// embedding is re-checked edge-by-edge before being reported.
pub fn mono_free(
    g: &TwoColoredGraph,
    h1: &Graph,
    h2: &Graph,
    budget: &mut Budget,
) -> FreenessReport {
    let start = budget.used();
    let red_result = contains_subgraph(g.red(), h1, budget);
    let blue_result = contains_subgraph(g.blue(), h2, budget);
    if let Outcome::Yes(emb) = &red_result {
        assert!(emb.check(g.red(), h1), "red embedding failed re-check");
    }
    if let Outcome::Yes(emb) = &blue_result {
        assert!(emb.check(g.blue(), h2), "blue embedding failed re-check");
    }
    FreenessReport {
        host_order: g.order(),
        red_pattern_order: h1.order(),
        blue_pattern_order: h2.order(),
        red_result,
        blue_result,
        budget_used: budget.used() - start,
    }
}

/// Exact rational minimum-degree audit: pass iff
/// min_degree >= (target − slack) · order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    pub min_degree: usize,
    pub order: usize,
    pub target: Rational,
    pub slack: Rational,
    pub pass: bool,
}

pub fn degree_audit(order: usize, min_degree: usize, target: Rational, slack: Rational) -> DegreeAudit {
    assert!(slack >= Rational::ZERO, "slack must be nonnegative");
    let bound = (target - slack) * order as i64;
    DegreeAudit {
        min_degree,
        order,
        target,
        slack,
        pass: Rational::from(min_degree as i64) >= bound,
    }
}
