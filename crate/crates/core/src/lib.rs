//! Colorings of exact distance graphs of chordal graphs, with the oracles
//! and structural checks needed to verify them.

pub mod accolor;
pub mod bounds;
pub mod chordal;
pub mod cli;
pub mod edgelist;
pub mod error;
pub mod exact;
pub mod facefill;
pub mod generators;
pub mod graph;
pub mod lemmas;
pub mod leveling;
pub mod oracle;

pub type Vertex = usize;

pub use chordal::{is_chordal, mcs_order, EliminationOrder};
pub use error::{Error, Result};
pub use exact::{color_distance_set, combined_coloring, exact_color, BoundReport, TupleColoring};
pub use graph::{exact_distance_graph, power_graph, DistanceOracle, Graph};
pub use oracle::{verify_proper, Coloring, Verdict};

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::graph::Graph;

    /// Triangle 0-1-2 with pendant vertices 3 on 1 and 4 on 2.
    pub fn pendant_triangle() -> Graph {
        Graph::from_edge_list(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]).unwrap()
    }

    /// Two triangles sharing the edge 1-2.
    pub fn two_triangles() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }
}
