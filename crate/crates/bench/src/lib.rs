//! Shared inputs for the criterion benches: the stress-case graphs and a
//! reference extremal build.

use deltachi_core::construct::{builtin_slot, g1, zoo, SlotGraph};
use deltachi_core::{Graph, TwoColoredGraph};

pub fn c10star() -> Graph {
    zoo("c10star_blow3").expect("builtin")
}

pub fn petersen() -> Graph {
    zoo("petersen").expect("builtin")
}

pub fn c5plus() -> Graph {
    zoo("c5plus_blow2").expect("builtin")
}

pub fn mcgee_slot() -> SlotGraph {
    builtin_slot("mcgee").expect("builtin")
}

/// The n = 120 reference build whose red side hosts the K3[2] refutation.
pub fn g1_reference() -> TwoColoredGraph {
    g1(120, &mcgee_slot(), Some(7))
        .expect("reference build")
        .graph
        .as_colored()
        .expect("g1 is colored")
        .clone()
}
