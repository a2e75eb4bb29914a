//! Red/blue edge-colored graphs and the `.cg6` two-line format.
//!
//! A `.cg6` payload is exactly two graph6 lines on the same vertex count:
//! line 1 the red subgraph, line 2 the blue subgraph, validated edge-disjoint.

use crate::error::Error;
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeColor {
    Red,
    Blue,
}

/// A graph whose edges are partitioned into red and blue subgraphs.
#[derive(Clone, PartialEq, Eq)]
pub struct TwoColoredGraph {
    red: Graph,
    blue: Graph,
}

impl TwoColoredGraph {
    pub fn new(red: Graph, blue: Graph) -> Result<Self, Error> {
        if red.order() != blue.order() {
            return Err(Error::InvalidArgument(format!(
                "color classes have different orders: {} vs {}",
                red.order(),
                blue.order()
            )));
        }
        if !red.edge_disjoint_with(&blue) {
            return Err(Error::InvalidArgument(
                "red and blue edge sets are not disjoint".into(),
            ));
        }
        Ok(TwoColoredGraph { red, blue })
    }

    pub fn empty(order: usize) -> Self {
        TwoColoredGraph { red: Graph::empty(order), blue: Graph::empty(order) }
    }

    pub fn order(&self) -> usize {
        self.red.order()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    pub fn add_edge(&mut self, u: usize, v: usize, color: EdgeColor) {
        debug_assert!(!self.red.has_edge(u, v) && !self.blue.has_edge(u, v), "recoloring {u}-{v}");
        match color {
            EdgeColor::Red => self.red.add_edge(u, v),
            EdgeColor::Blue => self.blue.add_edge(u, v),
        }
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<EdgeColor> {
        if self.red.has_edge(u, v) {
            Some(EdgeColor::Red)
        } else if self.blue.has_edge(u, v) {
            Some(EdgeColor::Blue)
        } else {
            None
        }
    }

    /// Union of both color classes.
    pub fn base(&self) -> Graph {
        self.red.edge_union(&self.blue).expect("same order by construction")
    }

    pub fn edge_count(&self) -> usize {
        self.red.edge_count() + self.blue.edge_count()
    }

    /// Minimum degree in the union graph (red and blue are edge-disjoint).
    pub fn min_degree(&self) -> usize {
        (0..self.order())
            .map(|v| self.red.degree(v) + self.blue.degree(v))
            .min()
            .unwrap_or(0)
    }

    /// Two graph6 lines: red first, then blue. No trailing newline.
    pub fn emit_cg6(&self) -> String {
        format!("{}\n{}", emit_graph6(&self.red), emit_graph6(&self.blue))
    }

    pub fn parse_cg6(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let red_line = lines
            .next()
            .ok_or_else(|| Error::parse(0, "cg6: missing red line"))?;
        let blue_line = lines
            .next()
            .ok_or_else(|| Error::parse(red_line.len(), "cg6: missing blue line"))?;
        if lines.next().is_some() {
            return Err(Error::parse(0, "cg6: more than two graph lines"));
        }
        let red = parse_graph6(red_line)?;
        let blue = parse_graph6(blue_line)?;
        TwoColoredGraph::new(red, blue)
    }
}

impl std::fmt::Debug for TwoColoredGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "TwoColoredGraph(n={}, red={}, blue={})",
            self.order(),
            self.red.edge_count(),
            self.blue.edge_count()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjointness_enforced() {
        let mut red = Graph::empty(3);
        red.add_edge(0, 1);
        let mut blue = Graph::empty(3);
        blue.add_edge(0, 1);
        assert!(TwoColoredGraph::new(red, blue).is_err());
    }

    #[test]
    fn cg6_roundtrip() {
        let mut g = TwoColoredGraph::empty(5);
        g.add_edge(0, 1, EdgeColor::Red);
        g.add_edge(1, 2, EdgeColor::Blue);
        g.add_edge(3, 4, EdgeColor::Red);
        let text = g.emit_cg6();
        let back = TwoColoredGraph::parse_cg6(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.color_of(1, 2), Some(EdgeColor::Blue));
        assert_eq!(back.color_of(0, 2), None);
        assert_eq!(back.base().edge_count(), 3);
    }
}
