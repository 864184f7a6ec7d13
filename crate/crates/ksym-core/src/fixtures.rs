//! Known 3-symmetric graphs shipped with the repository, embedded from the
//! `fixtures/` directory so library users and tests share one source of truth.

use crate::graph::Graph;

/// The 8-vertex wheel: the smallest nontrivial 3-symmetric graph used
/// throughout as a reference example.
pub fn wheel8() -> Graph {
    Graph::wheel(8)
}

/// A 3-symmetric graph of order 16 (60 edges, 70 triangles).
pub fn order16() -> Graph {
    Graph::from_adjacency_text(include_str!("../../../fixtures/order16.matrix"))
        .expect("bundled fixture parses")
}

/// A 3-symmetric graph of order 17 (68 edges, 85 triangles).
pub fn order17() -> Graph {
    Graph::from_adjacency_text(include_str!("../../../fixtures/order17.matrix"))
        .expect("bundled fixture parses")
}

/// A 3-symmetric graph of order 16 whose maximum degree is 9, the smallest
/// possible value above the average degree 7.5.
pub fn order16_maxdeg9() -> Graph {
    Graph::from_adjacency_text(include_str!("../../../fixtures/order16-maxdeg9.matrix"))
        .expect("bundled fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{profile2, profile3};
    use crate::graph6::emit_graph6;

    #[test]
    fn fixture_shapes() {
        let g16 = order16();
        assert_eq!(g16.order(), 16);
        assert_eq!(g16.edge_count(), 60);
        assert_eq!(profile3(&g16).triangles, 70);

        let g17 = order17();
        assert_eq!(g17.order(), 17);
        assert_eq!(g17.edge_count(), 68);
        assert_eq!(profile3(&g17).triangles, 85);

        let g9 = order16_maxdeg9();
        assert_eq!(g9.max_degree(), 9);
        assert_eq!(profile2(&g9).edges, 60);

        assert_eq!(wheel8().edge_count(), 14);
    }

    #[test]
    fn graph6_files_match_matrices() {
        let cases = [
            (order16(), include_str!("../../../fixtures/order16.g6")),
            (order17(), include_str!("../../../fixtures/order17.g6")),
            (
                order16_maxdeg9(),
                include_str!("../../../fixtures/order16-maxdeg9.g6"),
            ),
            (wheel8(), include_str!("../../../fixtures/wheel8.g6")),
        ];
        for (g, file) in cases {
            assert_eq!(emit_graph6(&g), file.trim_end());
        }
    }
}
