//! The Ramsey coloring of complete 5-partite graphs: red between consecutive
//! parts mod 5, blue between the rest — the unique monochromatic-triangle-free
//! pattern on K5, blown up.

use crate::colored::{EdgeColor, TwoColoredGraph};
use crate::error::Error;
use crate::N_MAX;

use super::{complete_between, consecutive_parts, BuildGraph, ConstructionRecipe, LabeledBuild};

pub fn ramsey_k5(sizes: [usize; 5]) -> Result<LabeledBuild, Error> {
    let total: usize = sizes.iter().sum();
    if total > N_MAX {
        return Err(Error::InvalidArgument(format!("order {total} exceeds N_MAX {N_MAX}")));
    }
    if sizes.iter().any(|&s| s == 0) {
        return Err(Error::InvalidArgument("all five part sizes must be positive".into()));
    }
    let named: Vec<(String, usize)> =
        (0..5).map(|i| (format!("V{}", i + 1), sizes[i])).collect();
    let refs: Vec<(&str, usize)> = named.iter().map(|(n, s)| (n.as_str(), *s)).collect();
    let (parts, n) = consecutive_parts(&refs);

    let mut g = TwoColoredGraph::empty(n);
    for i in 0..5usize {
        for j in i + 1..5 {
            let diff = j - i;
            let color = if diff == 1 || diff == 4 { EdgeColor::Red } else { EdgeColor::Blue };
            complete_between(&mut g, &parts[&format!("V{}", i + 1)], &parts[&format!("V{}", j + 1)], color);
        }
    }

    let mut recipe = ConstructionRecipe::new("ramsey_k5");
    for (i, s) in sizes.iter().enumerate() {
        recipe = recipe.param(&format!("size_v{}", i + 1), s);
    }
    let build = LabeledBuild { graph: BuildGraph::Colored(g), parts, recipe };
    debug_assert!(build.parts_partition_vertices());
    Ok(build)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blowup, Graph};
    use crate::search::Budget;
    use crate::subgraph::contains_subgraph;

    #[test]
    fn unit_sizes_give_two_disjoint_c5s() {
        let b = ramsey_k5([1, 1, 1, 1, 1]).unwrap();
        let g = b.graph.as_colored().unwrap();
        assert_eq!(g.red().edge_count(), 5);
        assert_eq!(g.blue().edge_count(), 5);
        assert_eq!(g.base().edge_count(), 10); // K5
        let mut budget = Budget::default();
        assert!(contains_subgraph(g.red(), &Graph::complete(3), &mut budget).is_no());
        assert!(contains_subgraph(g.blue(), &Graph::complete(3), &mut budget).is_no());
    }

    #[test]
    fn red_graph_is_the_c5_blowup() {
        let b = ramsey_k5([2, 2, 2, 2, 2]).unwrap();
        let g = b.graph.as_colored().unwrap();
        let expected = blowup(&Graph::cycle(5), 2).unwrap();
        // Same part layout: consecutive labels per class, consecutive classes adjacent.
        assert_eq!(g.red(), &expected);
    }

    #[test]
    fn three_blowup_has_no_mono_triangle() {
        let b = ramsey_k5([3, 3, 3, 3, 3]).unwrap();
        let g = b.graph.as_colored().unwrap();
        let mut budget = Budget::default();
        assert!(contains_subgraph(g.red(), &Graph::complete(3), &mut budget).is_no());
        assert!(contains_subgraph(g.blue(), &Graph::complete(3), &mut budget).is_no());
    }
}
