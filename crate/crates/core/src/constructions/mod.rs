//! Graph families with their explicit colorings, the edge-subdivision gadget,
//! and the constructive bipartite and split colorings.

pub mod bipartite;
pub mod families;
pub mod gadget;
pub mod split;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::verify_rlid;

pub use bipartite::{bipartite_three_coloring, level_decomposition, BipartiteColoring, LevelDecomposition};
pub use families::{h_p, power_path, prop1_graph, q1, q2, star};
pub use gadget::{g_star, lift_coloring_gstar, project_coloring_gstar, subdivide_with_pendants, GStar};
pub use split::{find_split_partition, split_rlid_coloring, split_separator, SplitColoring, SplitPartition};

/// A generated family member with role labels on every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub name: String,
    /// Carries one role label per vertex.
    pub graph: Graph,
    pub canonical_coloring: Option<Coloring>,
    pub expected_chi_rlid: Option<usize>,
}

impl FamilyInstance {
    /// Builds an instance, rejecting a canonical coloring that fails the rlid
    /// verifier.
    pub(crate) fn new(
        name: impl Into<String>,
        graph: Graph,
        canonical_coloring: Option<Coloring>,
        expected_chi_rlid: Option<usize>,
    ) -> Result<Self> {
        let name = name.into();
        if let Some(c) = &canonical_coloring {
            c.check_total(&graph)?;
            let report = verify_rlid(&graph, c);
            if !report.valid {
                let v = &report.violations[0];
                return Err(Error::TheoremCounterexample(format!(
                    "canonical coloring of {name} fails at edge ({}, {})",
                    v.u, v.v
                )));
            }
        }
        Ok(FamilyInstance {
            name,
            graph,
            canonical_coloring,
            expected_chi_rlid,
        })
    }

    pub fn roles(&self) -> &[String] {
        self.graph.labels().expect("family instances are labeled")
    }
}

/// Which path of a constructive algorithm produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringSource {
    /// The explicit construction, accepted by the verifier.
    Construction,
    /// The construction failed verification and the exact solver supplied
    /// the coloring.
    Fallback,
}
