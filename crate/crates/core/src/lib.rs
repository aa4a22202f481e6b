//! Relaxed locally identifying colorings of finite simple graphs.
//!
//! A coloring is *rlid* when every two adjacent vertices with different
//! closed neighborhoods see different sets of colors on those neighborhoods.
//! This crate verifies such colorings (and the stricter lid and identifying
//! variants), computes the optimal number of colors exactly on small graphs,
//! generates the extremal families and the 3-coloring reduction gadget, and
//! reports structural bounds.
//!
//! ```
//! use rlid_core::{chi_exact, verify_rlid, Graph, Parameter, SolveOptions};
//!
//! let p4 = Graph::path(4);
//! let r = chi_exact(&p4, Parameter::Rlid, &SolveOptions::default()).unwrap();
//! assert_eq!(r.value, 3);
//! assert!(verify_rlid(&p4, r.coloring().unwrap()).valid);
//! ```

pub mod bounds;
pub mod budget;
pub mod clique;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod iso;
pub mod solver;
pub mod sweep;
pub mod verify;

pub use bounds::{bounds_report, characterize_full_palette, lower_bound_log_omega, split_lower_bound, BoundsOptions, BoundsReport};
pub use budget::{Budget, DEFAULT_NODE_BUDGET};
pub use clique::{max_clique, max_clique_size};
pub use coloring::{neighborhood_color_set, Color, ColorSet, Coloring};
pub use constructions::{ColoringSource, FamilyInstance, SplitPartition};
pub use error::{Error, Result};
pub use generate::{enumerate_graphs, enumerate_nonisomorphic, random_split_graph, GraphClass};
pub use graph::{Graph, TwinPartition, Vertex};
pub use iso::is_isomorphic;
pub use solver::{chi_exact, decide_k, decide_k_proper, decide_k_rlid, gamma_id_exact, Parameter, SolveOptions, SolveResult, Status};
pub use verify::{is_rlid, verify, verify_id, verify_identifying_code, verify_lid, verify_proper, verify_rlid, Mode, VerificationReport};
