//! The pair classifier: δχ(H1,H2) for 3-chromatic H1, H2, decided from
//! (emb(H1), emb(H2)) and η = max{δχ(H1), δχ(H2)} through six branches, with
//! the full decision trace and every sub-certificate retained.

use crate::embed::{embeddability, EmbResult};
use crate::error::Error;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::recognition::{single_threshold, SingleThreshold};
use crate::search::Budget;
use serde::Serialize;
use std::fmt;

/// A pair-threshold value, constrained to {2/3, 5/7, 3/4, 7/9, 4/5}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ThresholdValue(Rational);

impl ThresholdValue {
    pub const CLOSED_SET: [(i64, i64); 5] = [(2, 3), (5, 7), (3, 4), (7, 9), (4, 5)];

    pub fn new(num: i64, den: i64) -> Self {
        let r = Rational::new(num, den);
        assert!(
            Self::CLOSED_SET.iter().any(|&(n, d)| Rational::new(n, d) == r),
            "{r} is not a pair-threshold value"
        );
        ThresholdValue(r)
    }

    pub fn rational(&self) -> Rational {
        self.0
    }

    pub fn numerator(&self) -> i64 {
        self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        self.0.denom()
    }
}

impl fmt::Display for ThresholdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The six classification branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// emb = (0, <=3): value 4/5
    EmbZero,
    /// emb = (1, <=3): value 7/9
    EmbOne,
    /// emb = (2, <=3): value 3/4
    EmbTwo,
    /// emb in {(3,3), (<=4,4)} and eta = 1/2: value 3/4
    EtaHalf,
    /// emb in {(3,3), (<=4,4)} and eta = 1/3: value 5/7
    EtaThird,
    /// emb in {(3,3), (<=4,4)} and eta = 0: value 2/3
    EtaZero,
}

impl Branch {
    pub fn value(self) -> ThresholdValue {
        match self {
            Branch::EmbZero => ThresholdValue::new(4, 5),
            Branch::EmbOne => ThresholdValue::new(7, 9),
            Branch::EmbTwo | Branch::EtaHalf => ThresholdValue::new(3, 4),
            Branch::EtaThird => ThresholdValue::new(5, 7),
            Branch::EtaZero => ThresholdValue::new(2, 3),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::EmbZero => write!(f, "emb(H1,H2) = (0, <=3)"),
            Branch::EmbOne => write!(f, "emb(H1,H2) = (1, <=3)"),
            Branch::EmbTwo => write!(f, "emb(H1,H2) = (2, <=3)"),
            Branch::EtaHalf => write!(f, "emb(H1,H2) in {{(3,3), (<=4,4)}} and eta = 1/2"),
            Branch::EtaThird => write!(f, "emb(H1,H2) in {{(3,3), (<=4,4)}} and eta = 1/3"),
            Branch::EtaZero => write!(f, "emb(H1,H2) in {{(3,3), (<=4,4)}} and eta = 0"),
        }
    }
}

/// Identifier of an extremal lower-bound construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtremalId {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl fmt::Display for ExtremalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format!("{self:?}").to_lowercase())
    }
}

/// The path taken through the decision diagram, with all evidence attached.
#[derive(Debug, Clone, Serialize)]
pub struct DecisionTrace {
    /// emb values sorted so emb1 <= emb2.
    pub emb1: u8,
    pub emb2: u8,
    /// Whether the sorted order swapped the caller's (h1, h2).
    pub swapped: bool,
    pub eta: Rational,
    pub branch: Branch,
    pub value: ThresholdValue,
    /// Embeddability evidence in sorted order.
    pub emb_detail: Box<(EmbResult, EmbResult)>,
    /// Single thresholds in sorted order.
    pub threshold_detail: Box<(SingleThreshold, SingleThreshold)>,
}

impl DecisionTrace {
    /// The decision-diagram node sequence, one line per visited node.
    pub fn diagram_path(&self) -> Vec<String> {
        let mut lines = Vec::new();
        let some_c5 = self.emb2 == 4;
        lines.push(format!("some Hi embeds into C5-blowups? {}", yesno(some_c5)));
        if !some_c5 {
            let both_z0 = self.emb1 >= 1;
            lines.push(format!("both Hi embed into Z0? {}", yesno(both_z0)));
            if both_z0 {
                let both_z1 = self.emb1 >= 2;
                lines.push(format!("both Hi embed into Z1? {}", yesno(both_z1)));
                if both_z1 {
                    let both_z2 = self.emb1 >= 3;
                    lines.push(format!("both Hi embed into Z2? {}", yesno(both_z2)));
                    if both_z2 {
                        lines.push("case (3,3): continue on the eta side".into());
                    }
                }
            }
        }
        if matches!(self.branch, Branch::EtaHalf | Branch::EtaThird | Branch::EtaZero) {
            lines.push(format!("eta = 1/2? {}", yesno(self.eta == Rational::new(1, 2))));
            if self.eta != Rational::new(1, 2) {
                lines.push(format!("eta = 1/3? {}", yesno(self.eta == Rational::new(1, 3))));
            }
        }
        lines.push(format!("value: {}", self.value));
        lines
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Classifies the pair (h1, h2). Both graphs must be 3-chromatic; any
/// sub-decision running out of budget surfaces as `Error::Undecided`.
pub fn pair_threshold(h1: &Graph, h2: &Graph, budget: &mut Budget) -> Result<DecisionTrace, Error> {
    let e1 = embeddability(h1, budget)?;
    let e2 = embeddability(h2, budget)?;
    let t1 = single_threshold(h1, budget)?;
    let t2 = single_threshold(h2, budget)?;
    trace_from_parts(e1, t1, e2, t2)
}

/// Assembles the trace from precomputed per-graph evidence (lets callers
/// memoize the expensive per-graph work across many pairs).
pub fn trace_from_parts(
    e1: EmbResult,
    t1: SingleThreshold,
    e2: EmbResult,
    t2: SingleThreshold,
) -> Result<DecisionTrace, Error> {
    let emb1 = e1
        .exact()
        .ok_or_else(|| Error::Undecided(format!("emb of first graph in [{}, {}]", e1.low, e1.high)))?;
    let emb2 = e2
        .exact()
        .ok_or_else(|| Error::Undecided(format!("emb of second graph in [{}, {}]", e2.low, e2.high)))?;

    let swapped = emb1 > emb2;
    let (emb_lo, emb_hi) = if swapped { (emb2, emb1) } else { (emb1, emb2) };
    let (e_lo, e_hi, t_lo, t_hi) = if swapped { (e2, e1, t2, t1) } else { (e1, e2, t1, t2) };
    let eta = t_lo.value.max(t_hi.value);

    let branch = if emb_hi == 4 || (emb_lo == 3 && emb_hi == 3) {
        if eta == Rational::new(1, 2) {
            Branch::EtaHalf
        } else if eta == Rational::new(1, 3) {
            Branch::EtaThird
        } else {
            Branch::EtaZero
        }
    } else {
        match emb_lo {
            0 => Branch::EmbZero,
            1 => Branch::EmbOne,
            2 => Branch::EmbTwo,
            _ => unreachable!("emb_lo = 3 forces emb_hi in {{3, 4}}, handled above"),
        }
    };

    Ok(DecisionTrace {
        emb1: emb_lo,
        emb2: emb_hi,
        swapped,
        eta,
        branch,
        value: branch.value(),
        emb_detail: Box::new((e_lo, e_hi)),
        threshold_detail: Box::new((t_lo, t_hi)),
    })
}

/// Which extremal construction realizes the trace's lower bound.
pub fn expected_construction(trace: &DecisionTrace) -> ExtremalId {
    match trace.branch {
        Branch::EmbZero => ExtremalId::G1,
        Branch::EmbOne => ExtremalId::G2,
        Branch::EmbTwo => ExtremalId::G3,
        Branch::EtaHalf => ExtremalId::G4,
        Branch::EtaThird => ExtremalId::G5,
        Branch::EtaZero => ExtremalId::G6,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::blowup;

    fn value_of(h1: &Graph, h2: &Graph) -> ThresholdValue {
        pair_threshold(h1, h2, &mut Budget::default()).unwrap().value
    }

    #[test]
    fn symmetric_pairs_from_small_zoo() {
        let c5 = Graph::cycle(5);
        let k3 = Graph::complete(3);
        let k3b = blowup(&k3, 2).unwrap();
        let c5b = blowup(&c5, 2).unwrap();
        assert_eq!(value_of(&c5, &c5), ThresholdValue::new(2, 3));
        assert_eq!(value_of(&k3, &k3), ThresholdValue::new(3, 4));
        assert_eq!(value_of(&k3b, &k3b), ThresholdValue::new(4, 5));
        assert_eq!(value_of(&c5b, &c5b), ThresholdValue::new(3, 4));
    }

    #[test]
    fn mixed_pair_is_symmetric() {
        let c5 = Graph::cycle(5);
        let k3 = Graph::complete(3);
        let a = pair_threshold(&c5, &k3, &mut Budget::default()).unwrap();
        let b = pair_threshold(&k3, &c5, &mut Budget::default()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.branch, b.branch);
        assert_eq!(a.value, ThresholdValue::new(5, 7));
        assert_eq!(expected_construction(&a), ExtremalId::G5);
    }

    #[test]
    fn branch_table() {
        let c5 = Graph::cycle(5);
        let k3b = blowup(&Graph::complete(3), 2).unwrap();
        let t = pair_threshold(&c5, &k3b, &mut Budget::default()).unwrap();
        // emb = (0, 4): the C5 side dominates, eta = 1/2.
        assert_eq!((t.emb1, t.emb2), (0, 4));
        assert_eq!(t.branch, Branch::EtaHalf);
        assert_eq!(t.value, ThresholdValue::new(3, 4));
        assert_eq!(expected_construction(&t), ExtremalId::G4);
    }

    #[test]
    fn non_three_chromatic_rejected() {
        assert!(matches!(
            pair_threshold(&Graph::cycle(4), &Graph::cycle(5), &mut Budget::default()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    #[should_panic(expected = "not a pair-threshold value")]
    fn closed_set_enforced() {
        let _ = ThresholdValue::new(1, 2);
    }

    #[test]
    fn diagram_path_mentions_value() {
        let c5 = Graph::cycle(5);
        let t = pair_threshold(&c5, &c5, &mut Budget::default()).unwrap();
        let path = t.diagram_path();
        assert!(path.first().unwrap().contains("C5"));
        assert!(path.last().unwrap().contains("2/3"));
    }
}
