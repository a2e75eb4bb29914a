//! Enumeration of non-isomorphic trees by canonical AHU codes.
//!
//! Trees on k vertices are grown by attaching a leaf to every vertex of every
//! tree on k-1 vertices and deduplicating by canonical code (rooted AHU code
//! minimized over the tree's 1-2 centers). The emitted graphs are relabeled
//! from their own canonical codes, so the output order and labelings are
//! deterministic - universal forests serialize bit-exactly.

use crate::graph::Graph;

/// All non-isomorphic trees on exactly `k` vertices (k >= 1), sorted by
/// canonical code, each with the canonical DFS labeling.
pub fn nonisomorphic_trees(k: usize) -> Vec<Graph> {
    assert!(k >= 1);
    let mut codes: Vec<String> = vec![rooted_code_of_single()];
    for _ in 2..=k {
        let mut next: Vec<String> = Vec::new();
        for code in &codes {
            let tree = tree_from_code(code);
            for attach in 0..tree.order() {
                let mut grown = Graph::empty(tree.order() + 1);
                for (u, v) in tree.edges() {
                    grown.add_edge(u, v);
                }
                grown.add_edge(attach, tree.order());
                let canon = canonical_code(&grown);
                if !next.contains(&canon) {
                    next.push(canon);
                }
            }
        }
        next.sort();
        codes = next;
    }
    codes.sort();
    codes.iter().map(|c| tree_from_code(c)).collect()
}

fn rooted_code_of_single() -> String {
    "()".to_string()
}

/// Canonical code: the lexicographically smallest rooted AHU code over the
/// tree's center vertices.
pub fn canonical_code(tree: &Graph) -> String {
    centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c))
        .min()
        .expect("tree is nonempty")
}

/// The 1 or 2 middle vertices of a longest path, by iterative leaf stripping.
fn centers(tree: &Graph) -> Vec<usize> {
    let n = tree.order();
    if n == 1 {
        return vec![0];
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for w in tree.neighbors(v).iter() {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn rooted_code(tree: &Graph, root: usize) -> String {
    fn rec(tree: &Graph, v: usize, parent: usize) -> String {
        let mut children: Vec<String> = tree
            .neighbors(v)
            .iter()
            .filter(|&w| w != parent)
            .map(|w| rec(tree, w, v))
            .collect();
        children.sort();
        format!("({})", children.concat())
    }
    rec(tree, root, usize::MAX)
}

/// Rebuilds a tree from a rooted code, labeling vertices in code (DFS) order.
pub fn tree_from_code(code: &str) -> Graph {
    let n = code.len() / 2;
    let mut g = Graph::empty(n);
    let mut stack: Vec<usize> = Vec::new();
    let mut next_label = 0usize;
    for ch in code.chars() {
        match ch {
            '(' => {
                let label = next_label;
                next_label += 1;
                if let Some(&parent) = stack.last() {
                    g.add_edge(parent, label);
                }
                stack.push(label);
            }
            ')' => {
                stack.pop();
            }
            _ => panic!("invalid tree code character {ch:?}"),
        }
    }
    debug_assert_eq!(next_label, n);
    g
}
