#![allow(dead_code)]

use litgame_core::enumerate::connected_graphs;
use litgame_core::f2::{adjacency_matrix, Inversion};
use litgame_core::graph::{is_nondegenerate_line_graph, parse_graph, Graph};

pub const EXAMPLE: &str = "6 10\n0 1\n0 2\n0 4\n1 2\n1 3\n1 4\n2 5\n3 4\n3 5\n4 5";

pub fn example() -> Graph {
    parse_graph(EXAMPLE).unwrap()
}

pub fn is_invertible(g: &Graph) -> bool {
    matches!(adjacency_matrix(g).invert(), Inversion::Invertible(_))
}

/// Connected nondegenerate graphs of order at most `max_n` that are not line
/// graphs, up to isomorphism.
pub fn corpus(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .step_by(2)
        .flat_map(connected_graphs)
        .filter(|g| is_invertible(g) && !is_nondegenerate_line_graph(g))
        .collect()
}
