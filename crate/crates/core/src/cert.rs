//! Self-contained certificate envelope for serialization and re-checking.
//!
//! Every positive structural decision in the engine emits one of these; the
//! verifier in [`crate::verify`] re-checks them by direct scan without
//! sharing any search code with the producers.

use crate::chromatic::ColoringCert;
use crate::embed::{HomC5Cert, Z0Cert, ZykovSideCert};
use crate::forest::ForestCertificate;
use crate::recognition::{ForestDeletionCert, NearAcyclicCert, SingleThreshold};
use crate::subgraph::Embedding;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    ProperColoring(ColoringCert),
    Forest(ForestCertificate),
    ForestDeletion(ForestDeletionCert),
    NearAcyclic(NearAcyclicCert),
    HomC5(HomC5Cert),
    Z0(Z0Cert),
    Z1(ZykovSideCert),
    Z2(ZykovSideCert),
    /// A subgraph embedding; the pattern rides along as a graph6 line so the
    /// certificate stays self-contained.
    Embedding { pattern_g6: String, embedding: Embedding },
    SingleThreshold(SingleThreshold),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::ProperColoring(_) => "proper_coloring",
            Certificate::Forest(_) => "forest",
            Certificate::ForestDeletion(_) => "forest_deletion",
            Certificate::NearAcyclic(_) => "near_acyclic",
            Certificate::HomC5(_) => "hom_c5",
            Certificate::Z0(_) => "z0",
            Certificate::Z1(_) => "z1",
            Certificate::Z2(_) => "z2",
            Certificate::Embedding { .. } => "embedding",
            Certificate::SingleThreshold(_) => "single_threshold",
        }
    }
}
