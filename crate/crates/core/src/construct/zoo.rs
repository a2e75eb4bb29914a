//! The built-in example zoo with deterministic labelings.

use crate::error::Error;
use crate::graph::{blowup, disjoint_union, Graph};

use super::slots::mcgee;

/// All zoo names, in canonical listing order.
pub fn zoo_names() -> &'static [&'static str] {
    &[
        "c5",
        "c10star_blow3",
        "c5_blow2",
        "petersen",
        "pg+c10star_blow3",
        "pg+c5_blow2",
        "k3",
        "c5_blow2+k3",
        "c5plus_blow2",
        "k3_blow2",
        "mcgee",
    ]
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// 3-blowup of C10 with the parts in cyclic order
/// (X1, Y2, X3, Y4, X5, Y1, X2, Y3, X4, Y5), plus copy-index-aligned perfect
/// matchings on the pairs (Y2,Y3), (Y3,Y4), (Y4,Y5).
pub fn c10star_blow3() -> Graph {
    let mut g = blowup(&Graph::cycle(10), 3).expect("30 vertices");
    // Cyclic part positions: X1=0 Y2=1 X3=2 Y4=3 X5=4 Y1=5 X2=6 Y3=7 X4=8 Y5=9
    let y2 = 1;
    let y3 = 7;
    let y4 = 3;
    let y5 = 9;
    for i in 0..3 {
        g.add_edge(3 * y2 + i, 3 * y3 + i);
        g.add_edge(3 * y3 + i, 3 * y4 + i);
        g.add_edge(3 * y4 + i, 3 * y5 + i);
    }
    g
}

/// C5[2] plus one edge inside the first blowup class.
pub fn c5plus_blow2() -> Graph {
    let mut g = blowup(&Graph::cycle(5), 2).expect("10 vertices");
    g.add_edge(0, 1);
    g
}

/// Builds a zoo graph by name.
pub fn zoo(name: &str) -> Result<Graph, Error> {
    match name {
        "c5" => Ok(Graph::cycle(5)),
        "k3" => Ok(Graph::complete(3)),
        "petersen" | "pg" => Ok(petersen()),
        "k3_blow2" => Ok(blowup(&Graph::complete(3), 2).expect("6 vertices")),
        "c5_blow2" => Ok(blowup(&Graph::cycle(5), 2).expect("10 vertices")),
        "c5plus_blow2" => Ok(c5plus_blow2()),
        "c10star_blow3" => Ok(c10star_blow3()),
        "mcgee" => Ok(mcgee()),
        "pg+c10star_blow3" => Ok(disjoint_union(&[&petersen(), &c10star_blow3()])),
        "pg+c5_blow2" => {
            Ok(disjoint_union(&[&petersen(), &blowup(&Graph::cycle(5), 2).unwrap()]))
        }
        "c5_blow2+k3" => {
            Ok(disjoint_union(&[&blowup(&Graph::cycle(5), 2).unwrap(), &Graph::complete(3)]))
        }
        other => Err(Error::InvalidArgument(format!("unknown zoo graph {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chromatic_number;
    use crate::search::Budget;

    #[test]
    fn c10star_counts() {
        let g = c10star_blow3();
        assert_eq!(g.order(), 30);
        // 10 cycle edges blown to K_{3,3} (9 each) + 3 matchings of 3
        assert_eq!(g.edge_count(), 99);
    }

    #[test]
    fn c10star_matchings_are_between_y_parts() {
        let g = c10star_blow3();
        assert!(g.has_edge(3, 21)); // Y2 copy 0 - Y3 copy 0
        assert!(!g.has_edge(3, 22)); // matchings are copy-aligned
        assert!(g.has_edge(21, 9)); // Y3 copy 0 - Y4 copy 0
        assert!(g.has_edge(9, 27)); // Y4 copy 0 - Y5 copy 0
    }

    #[test]
    fn c10star_is_three_chromatic() {
        let chi = chromatic_number(&c10star_blow3(), &mut Budget::default());
        assert_eq!(chi.witness().unwrap().chi, 3);
    }

    #[test]
    fn petersen_stats() {
        let g = petersen();
        let s = g.girth_stats();
        assert_eq!((s.girth, s.odd_girth), (Some(5), Some(5)));
        let chi = chromatic_number(&g, &mut Budget::default());
        assert_eq!(chi.witness().unwrap().chi, 3);
    }

    #[test]
    fn every_name_resolves() {
        for name in zoo_names() {
            assert!(zoo(name).is_ok(), "zoo name {name} failed");
        }
        assert!(zoo("nope").is_err());
    }

    #[test]
    fn unions_have_expected_orders() {
        assert_eq!(zoo("pg+c10star_blow3").unwrap().order(), 40);
        assert_eq!(zoo("pg+c5_blow2").unwrap().order(), 20);
        assert_eq!(zoo("c5_blow2+k3").unwrap().order(), 13);
    }
}
