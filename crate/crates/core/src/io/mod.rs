//! File formats, JSON reports and DOT export.

pub mod dot;
pub mod formats;
pub mod report;

pub use dot::export_dot;
pub use formats::{
    parse_coloring, parse_dimacs, parse_edgelist, parse_graph, parse_graph_file, write_coloring, write_dimacs,
    write_edgelist, write_graph, GraphFormat, Parsed,
};
pub use report::{render, solve_json};
