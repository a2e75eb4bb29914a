//! The six extremal two-colored constructions realizing the classification's
//! lower bounds.
//!
//! G1/G4/G6 are exact-degree builds around a pluggable high-girth slot graph
//! E embedded red into V1. G2/G3/G5 carry Borsuk–Hajnal surrogate parts, with
//! every asymptotically-small quantity made explicit through the `alpha`
//! parameter (so their minimum degrees satisfy reported inequalities rather
//! than exact formulas).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colored::{EdgeColor, TwoColoredGraph};
use crate::error::Error;
use crate::rational::Rational;
use crate::N_MAX;

use super::borsuk;
use super::slots::SlotGraph;
use super::{complete_between, consecutive_parts, BuildGraph, ConstructionRecipe, LabeledBuild};

use EdgeColor::{Blue, Red};

fn check_order(n: usize) -> Result<(), Error> {
    if n > N_MAX {
        return Err(Error::InvalidArgument(format!("n = {n} exceeds N_MAX {N_MAX}")));
    }
    Ok(())
}

/// Validates the slot against the part it must fit and the requested girth.
fn check_slot(slot: &SlotGraph, part_size: usize, required_girth: Option<usize>) -> Result<(), Error> {
    if slot.graph.order() > part_size {
        return Err(Error::SlotViolation(format!(
            "slot {} has {} vertices but the host part has only {part_size}",
            slot.name,
            slot.graph.order()
        )));
    }
    if let Some(need) = required_girth {
        if slot.declared_girth < need {
            return Err(Error::SlotViolation(format!(
                "slot {} declares girth {} below the required {need}",
                slot.name, slot.declared_girth
            )));
        }
    }
    Ok(())
}

/// Copies the slot's edges into a part (labels offset by the part's first
/// vertex), colored red.
fn embed_slot_red(g: &mut TwoColoredGraph, slot: &SlotGraph, offset: usize) {
    for (u, v) in slot.graph.edges() {
        g.add_edge(offset + u, offset + v, Red);
    }
}

/// Complete 5-partite with the Ramsey coloring (red between consecutive parts
/// mod 5), equal parts n/5, and a red slot graph inside V1. δ = 4n/5 exactly.
pub fn g1(n: usize, slot: &SlotGraph, required_girth: Option<usize>) -> Result<LabeledBuild, Error> {
    check_order(n)?;
    if n % 5 != 0 {
        return Err(Error::InvalidArgument(format!("g1 needs 5 | n, got n = {n}")));
    }
    let part = n / 5;
    check_slot(slot, part, required_girth)?;
    let sizes: Vec<(String, usize)> = (1..=5).map(|i| (format!("V{i}"), part)).collect();
    let refs: Vec<(&str, usize)> = sizes.iter().map(|(s, z)| (s.as_str(), *z)).collect();
    let (parts, _) = consecutive_parts(&refs);

    let mut g = TwoColoredGraph::empty(n);
    for i in 0..5usize {
        for j in i + 1..5 {
            let color = if j - i == 1 || j - i == 4 { Red } else { Blue };
            complete_between(&mut g, &parts[&format!("V{}", i + 1)], &parts[&format!("V{}", j + 1)], color);
        }
    }
    embed_slot_red(&mut g, slot, 0);

    let min_degree = g.min_degree();
    let build = LabeledBuild {
        graph: BuildGraph::Colored(g),
        parts,
        recipe: ConstructionRecipe::new("g1")
            .param("n", n)
            .param("min_degree", min_degree)
            .slot("E", slot.describe()),
    };
    debug_assert!(build.parts_partition_vertices());
    Ok(build)
}

/// Complete 4-partite, red on [V1,V2] and [V3,V4], blue elsewhere, red slot
/// inside V1. δ = 3n/4 exactly.
pub fn g4(n: usize, slot: &SlotGraph, required_girth: Option<usize>) -> Result<LabeledBuild, Error> {
    check_order(n)?;
    if n % 4 != 0 {
        return Err(Error::InvalidArgument(format!("g4 needs 4 | n, got n = {n}")));
    }
    let part = n / 4;
    check_slot(slot, part, required_girth)?;
    let sizes: Vec<(String, usize)> = (1..=4).map(|i| (format!("V{i}"), part)).collect();
    let refs: Vec<(&str, usize)> = sizes.iter().map(|(s, z)| (s.as_str(), *z)).collect();
    let (parts, _) = consecutive_parts(&refs);

    let mut g = TwoColoredGraph::empty(n);
    for i in 0..4usize {
        for j in i + 1..4 {
            let color = if (i, j) == (0, 1) || (i, j) == (2, 3) { Red } else { Blue };
            complete_between(&mut g, &parts[&format!("V{}", i + 1)], &parts[&format!("V{}", j + 1)], color);
        }
    }
    embed_slot_red(&mut g, slot, 0);

    let min_degree = g.min_degree();
    let build = LabeledBuild {
        graph: BuildGraph::Colored(g),
        parts,
        recipe: ConstructionRecipe::new("g4")
            .param("n", n)
            .param("min_degree", min_degree)
            .slot("E", slot.describe()),
    };
    debug_assert!(build.parts_partition_vertices());
    Ok(build)
}

/// Complete 3-partite, red on [V2,V3], blue on [V1,V2] and [V1,V3], red slot
/// inside V1. δ = 2n/3 exactly.
pub fn g6(n: usize, slot: &SlotGraph, required_girth: Option<usize>) -> Result<LabeledBuild, Error> {
    check_order(n)?;
    if n % 3 != 0 {
        return Err(Error::InvalidArgument(format!("g6 needs 3 | n, got n = {n}")));
    }
    let part = n / 3;
    check_slot(slot, part, required_girth)?;
    let (parts, _) = consecutive_parts(&[("V1", part), ("V2", part), ("V3", part)]);

    let mut g = TwoColoredGraph::empty(n);
    complete_between(&mut g, &parts["V1"], &parts["V2"], Blue);
    complete_between(&mut g, &parts["V1"], &parts["V3"], Blue);
    complete_between(&mut g, &parts["V2"], &parts["V3"], Red);
    embed_slot_red(&mut g, slot, 0);

    let min_degree = g.min_degree();
    let build = LabeledBuild {
        graph: BuildGraph::Colored(g),
        parts,
        recipe: ConstructionRecipe::new("g6")
            .param("n", n)
            .param("min_degree", min_degree)
            .slot("E", slot.describe()),
    };
    debug_assert!(build.parts_partition_vertices());
    Ok(build)
}

/// Shared geometry for the three surrogate-backed builds: samples U'-points
/// and antipodal W-points from one seeded stream.
struct BhWiring {
    u_points: Vec<Vec<f64>>,
    rng: ChaCha8Rng,
    dim: usize,
}

impl BhWiring {
    fn new(d: usize, u_count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = d + 1;
        let u_points = (0..u_count).map(|_| borsuk::sphere_point(&mut rng, dim)).collect();
        BhWiring { u_points, rng, dim }
    }

    /// Red near-antipodal edges inside the U' range starting at `offset`.
    fn borsuk_internal(&self, g: &mut TwoColoredGraph, offset: usize, eps: f64) {
        for a in 0..self.u_points.len() {
            for b in a + 1..self.u_points.len() {
                if borsuk::sum_norm(&self.u_points[a], &self.u_points[b]) <= eps {
                    g.add_edge(offset + a, offset + b, Red);
                }
            }
        }
    }

    /// Red half-space wiring from U' (at `u_offset`) to a fresh antipodal
    /// W-set of `w_count` vertices starting at `w_offset`.
    fn wire_half(&mut self, g: &mut TwoColoredGraph, u_offset: usize, w_offset: usize, w_count: usize) {
        let w_points = borsuk::antipodal_points(&mut self.rng, self.dim, w_count);
        for (a, pu) in self.u_points.iter().enumerate() {
            for (b, pw) in w_points.iter().enumerate() {
                if pu.iter().zip(pw).map(|(x, y)| x * y).sum::<f64>() > 0.0 {
                    g.add_edge(u_offset + a, w_offset + b, Red);
                }
            }
        }
    }
}

/// Ramsey-colored 5-partite with |V1| = n/9 and the rest 2n/9; V1 splits into
/// V1' (⌈αn⌉, carrying the surrogate core) and V1''; the red [V1',V2] blowup
/// pair is replaced by surrogate half-wiring. δ >= (7/9 − α)n reported.
pub fn g2(n: usize, alpha: Rational, d: usize, eps: f64, seed: u64) -> Result<LabeledBuild, Error> {
    check_order(n)?;
    if n % 9 != 0 {
        return Err(Error::InvalidArgument(format!("g2 needs 9 | n, got n = {n}")));
    }
    let v1 = n / 9;
    let big = 2 * n / 9;
    let v1p = (alpha * n as i64).ceil().max(1) as usize;
    if v1p >= v1 {
        return Err(Error::InvalidArgument(format!(
            "g2 needs ceil(alpha*n) = {v1p} strictly below n/9 = {v1}"
        )));
    }
    let v1pp = v1 - v1p;
    let (parts, _) = consecutive_parts(&[
        ("V1'", v1p),
        ("V1''", v1pp),
        ("V2", big),
        ("V3", big),
        ("V4", big),
        ("V5", big),
    ]);

    let mut g = TwoColoredGraph::empty(n);
    let whole_v1 = {
        let mut s = parts["V1'"].clone();
        s.union_with(&parts["V1''"]);
        s
    };
    // Consecutive (red) pairs except [V1', V2]; non-consecutive pairs blue.
    complete_between(&mut g, &parts["V1''"], &parts["V2"], Red);
    complete_between(&mut g, &parts["V2"], &parts["V3"], Red);
    complete_between(&mut g, &parts["V3"], &parts["V4"], Red);
    complete_between(&mut g, &parts["V4"], &parts["V5"], Red);
    complete_between(&mut g, &parts["V5"], &whole_v1, Red);
    complete_between(&mut g, &whole_v1, &parts["V3"], Blue);
    complete_between(&mut g, &whole_v1, &parts["V4"], Blue);
    complete_between(&mut g, &parts["V2"], &parts["V4"], Blue);
    complete_between(&mut g, &parts["V2"], &parts["V5"], Blue);
    complete_between(&mut g, &parts["V3"], &parts["V5"], Blue);

    let mut wiring = BhWiring::new(d, v1p, seed);
    wiring.borsuk_internal(&mut g, 0, eps);
    wiring.wire_half(&mut g, 0, v1, big);

    let min_degree = g.min_degree();
    let build = LabeledBuild {
        graph: BuildGraph::Colored(g),
        parts,
        recipe: ConstructionRecipe::new("g2")
            .param("n", n)
            .param("alpha", alpha)
            .param("d", d)
            .param("eps", eps)
            .param("seed", seed)
            .param("min_degree", min_degree),
    };
    debug_assert!(build.parts_partition_vertices());
    Ok(build)
}

/// Ramsey-colored 5-partite with |V1| = ⌈αn⌉ and the rest (n−|V1|)/4; both
/// red pairs [V1,V2] and [V1,V5] replaced by surrogate half-wirings sharing
/// the same core. δ >= (3/4 − α)n reported.
pub fn g3(n: usize, alpha: Rational, d: usize, eps: f64, seed: u64) -> Result<LabeledBuild, Error> {
    check_order(n)?;
    let v1 = (alpha * n as i64).ceil().max(1) as usize;
    if (n - v1) % 4 != 0 {
        return Err(Error::InvalidArgument(format!(
            "g3 needs 4 | (n - ceil(alpha*n)); n = {n} gives |V1| = {v1}, remainder {}",
            (n - v1) % 4
        )));
    }
    let big = (n - v1) / 4;
    let (parts, _) = consecutive_parts(&[
        ("V1", v1),
        ("V2", big),
        ("V3", big),
        ("V4", big),
        ("V5", big),
    ]);

    let mut g = TwoColoredGraph::empty(n);
    complete_between(&mut g, &parts["V2"], &parts["V3"], Red);
    complete_between(&mut g, &parts["V3"], &parts["V4"], Red);
    complete_between(&mut g, &parts["V4"], &parts["V5"], Red);
    complete_between(&mut g, &parts["V1"], &parts["V3"], Blue);
    complete_between(&mut g, &parts["V1"], &parts["V4"], Blue);
    complete_between(&mut g, &parts["V2"], &parts["V4"], Blue);
    complete_between(&mut g, &parts["V2"], &parts["V5"], Blue);
    complete_between(&mut g, &parts["V3"], &parts["V5"], Blue);

    let mut wiring = BhWiring::new(d, v1, seed);
    wiring.borsuk_internal(&mut g, 0, eps);
    wiring.wire_half(&mut g, 0, v1, big); // [V1, V2]
    wiring.wire_half(&mut g, 0, v1 + 3 * big, big); // [V1, V5]

    let min_degree = g.min_degree();
    let build = LabeledBuild {
        graph: BuildGraph::Colored(g),
        parts,
        recipe: ConstructionRecipe::new("g3")
            .param("n", n)
            .param("alpha", alpha)
            .param("d", d)
            .param("eps", eps)
            .param("seed", seed)
            .param("min_degree", min_degree),
    };
    debug_assert!(build.parts_partition_vertices());
    Ok(build)
}

/// Blue complete bipartite between V1∪V2∪V3 and V4∪V5; red surrogate
/// three-part gadget on (V1,V2,V3) plus a red complete bipartite [V4,V5].
/// Sizes |V1| = ⌈αn⌉, |V3| = n/7 − |V1|, |V2| = |V4| = |V5| = 2n/7.
/// δ >= (5/7 − α)n reported.
pub fn g5(n: usize, alpha: Rational, d: usize, eps: f64, seed: u64) -> Result<LabeledBuild, Error> {
    check_order(n)?;
    if n % 7 != 0 {
        return Err(Error::InvalidArgument(format!("g5 needs 7 | n, got n = {n}")));
    }
    let big = 2 * n / 7;
    let v1 = (alpha * n as i64).ceil().max(1) as usize;
    if v1 >= n / 7 {
        return Err(Error::InvalidArgument(format!(
            "g5 needs ceil(alpha*n) = {v1} strictly below n/7 = {}",
            n / 7
        )));
    }
    let v3 = n / 7 - v1;
    let (parts, _) = consecutive_parts(&[
        ("V1", v1),
        ("V2", big),
        ("V3", v3),
        ("V4", big),
        ("V5", big),
    ]);

    let mut g = TwoColoredGraph::empty(n);
    let left = {
        let mut s = parts["V1"].clone();
        s.union_with(&parts["V2"]);
        s.union_with(&parts["V3"]);
        s
    };
    let right = {
        let mut s = parts["V4"].clone();
        s.union_with(&parts["V5"]);
        s
    };
    complete_between(&mut g, &left, &right, Blue);
    complete_between(&mut g, &parts["V4"], &parts["V5"], Red);
    complete_between(&mut g, &parts["V2"], &parts["V3"], Red); // X complete to W

    let mut wiring = BhWiring::new(d, v1, seed);
    wiring.borsuk_internal(&mut g, 0, eps);
    wiring.wire_half(&mut g, 0, v1, big); // U' to W = V2

    let min_degree = g.min_degree();
    let build = LabeledBuild {
        graph: BuildGraph::Colored(g),
        parts,
        recipe: ConstructionRecipe::new("g5")
            .param("n", n)
            .param("alpha", alpha)
            .param("d", d)
            .param("eps", eps)
            .param("seed", seed)
            .param("min_degree", min_degree),
    };
    debug_assert!(build.parts_partition_vertices());
    Ok(build)
}
