//! Universal forests and Zykov graphs.

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::forest::{forest_certificate, ForestCheck};
use crate::graph::Graph;
use crate::trees::nonisomorphic_trees;
use crate::N_MAX;

use super::{BuildGraph, ConstructionRecipe, LabeledBuild};

/// Tree-enumeration cap: a(10) = 106 trees is ample for desk scale and keeps
/// the Zykov U-part within N_MAX for the feasible (k, t).
pub const MAX_TREE_VERTICES: usize = 10;

/// t disjoint copies of all non-isomorphic trees on k vertices, in canonical
/// order (copy-major, trees sorted by canonical code).
pub fn universal_forest(k: usize, t: usize) -> Result<LabeledBuild, Error> {
    if k == 0 || k > MAX_TREE_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "universal forest needs 1 <= k <= {MAX_TREE_VERTICES}, got {k}"
        )));
    }
    if t == 0 {
        return Err(Error::InvalidArgument("universal forest needs t >= 1".into()));
    }
    let trees = nonisomorphic_trees(k);
    let per_copy: usize = trees.len() * k;
    let order = per_copy * t;
    if order > N_MAX {
        return Err(Error::InvalidArgument(format!(
            "universal forest order {order} exceeds N_MAX {N_MAX}"
        )));
    }
    let mut g = Graph::empty(order);
    let mut offset = 0;
    for _copy in 0..t {
        for tree in &trees {
            for (u, v) in tree.edges() {
                g.add_edge(offset + u, offset + v);
            }
            offset += k;
        }
    }
    let components = trees.len() * t;
    let mut parts = std::collections::BTreeMap::new();
    parts.insert("F".to_string(), VertexSet::full(order));
    Ok(LabeledBuild {
        graph: BuildGraph::Plain(g),
        parts,
        recipe: ConstructionRecipe::new("universal_forest")
            .param("k", k)
            .param("t", t)
            .param("components", components)
            .param("trees_per_copy", trees.len()),
    })
}

/// The (k,t)-Zykov graph on A ∪ U: A carries the universal forest; U has one
/// vertex u^i_I per copy index i < t and component subset I ⊆ [c], joined to
/// the full canonical side-0 of component j for j ∈ I and to side-1 for
/// j ∉ I. U vertices are labeled |A| + i·2^c + I.
pub fn zykov(k: usize, t: usize) -> Result<LabeledBuild, Error> {
    let forest_build = universal_forest(k, t)?;
    let forest_graph = forest_build.graph.as_plain().unwrap();
    let a_size = forest_graph.order();
    let forest = match forest_certificate(forest_graph, &VertexSet::full(a_size)) {
        ForestCheck::Forest(cert) => cert,
        ForestCheck::NotAForest { .. } => unreachable!("universal forest is acyclic"),
    };
    let c = forest.components;
    if c >= usize::BITS as usize - 1 {
        return Err(Error::InvalidArgument(format!("2^{c} U-vertices is out of range")));
    }
    let u_size = t << c;
    let order = a_size + u_size;
    if order > N_MAX {
        return Err(Error::InvalidArgument(format!(
            "Zykov graph order {order} exceeds N_MAX {N_MAX}"
        )));
    }

    // Map component ids to 0..c-1 in increasing order.
    let comp_ids = forest.component_ids();
    let comp_index = |id: u32| comp_ids.binary_search(&id).unwrap();

    let mut g = Graph::empty(order);
    for (u, v) in forest_graph.edges() {
        g.add_edge(u, v);
    }
    for i in 0..t {
        for subset in 0..(1usize << c) {
            let u_label = a_size + (i << c) + subset;
            for a in 0..a_size {
                let j = comp_index(forest.component(a));
                let wanted_side = if subset >> j & 1 == 1 { 0 } else { 1 };
                if forest.side(a) == wanted_side {
                    g.add_edge(u_label, a);
                }
            }
        }
    }

    let mut parts = std::collections::BTreeMap::new();
    parts.insert("A".to_string(), VertexSet::from_iter(order, 0..a_size));
    parts.insert("U".to_string(), VertexSet::from_iter(order, a_size..order));
    Ok(LabeledBuild {
        graph: BuildGraph::Plain(g),
        parts,
        recipe: ConstructionRecipe::new("zykov")
            .param("k", k)
            .param("t", t)
            .param("components", c)
            .param("a_size", a_size)
            .param("u_size", u_size),
    })
}
