//! Text formats for graphs.

mod edge_list;
mod graph6;

pub use edge_list::{parse_edge_list, to_edge_list, EdgeListError};
pub use graph6::{parse_graph6, parse_graph6_str, to_graph6, Graph6Error};
