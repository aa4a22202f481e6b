//! Validity checks for colorings and identifying codes, with exhaustive
//! violation evidence.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::error::Error;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Rlid,
    Lid,
    Id,
    Proper,
    IdCode,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Rlid => "rlid",
            Mode::Lid => "lid",
            Mode::Id => "id",
            Mode::Proper => "proper",
            Mode::IdCode => "id-code",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rlid" => Ok(Mode::Rlid),
            "lid" => Ok(Mode::Lid),
            "id" => Ok(Mode::Id),
            "proper" => Ok(Mode::Proper),
            "id-code" => Ok(Mode::IdCode),
            other => Err(Error::InvalidParameter(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ViolationKind {
    /// `c(N[u]) = c(N[v])`.
    SameColorSet { colors: Vec<Color> },
    /// `N[u] = N[v]`, which no coloring can separate.
    Twins,
    /// Edge whose endpoints share a color.
    MonochromaticEdge { color: Color },
    /// `N[u] ∩ C = N[v] ∩ C` for a code `C`.
    SameCodeTrace { trace: Vec<Vertex> },
    /// `N[u] ∩ C` is empty; reported with `u = v`.
    Undominated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub adjacent: bool,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn from_violations(mode: Mode, violations: Vec<Violation>) -> Self {
        VerificationReport {
            mode,
            valid: violations.is_empty(),
            violations,
        }
    }
}

/// Closed-neighborhood color sets of every vertex, one bit row each.
fn color_sets(g: &Graph, c: &Coloring) -> Vec<FixedBitSet> {
    assert_eq!(c.len(), g.order(), "coloring must be total on the graph");
    g.vertices()
        .map(|v| {
            let mut set = FixedBitSet::with_capacity(c.palette() as usize + 1);
            for u in g.closed_neighborhood(v).ones() {
                set.insert(c.color(u) as usize);
            }
            set
        })
        .collect()
}

fn same_set(u: Vertex, v: Vertex, adjacent: bool, set: &FixedBitSet) -> Violation {
    Violation {
        u,
        v,
        adjacent,
        kind: ViolationKind::SameColorSet {
            colors: set.ones().map(|c| c as Color).collect(),
        },
    }
}

/// Adjacent vertices with distinct closed neighborhoods must see distinct
/// color sets; twin pairs are exempt.
pub fn verify_rlid(g: &Graph, c: &Coloring) -> VerificationReport {
    let sets = color_sets(g, c);
    let violations = g
        .edges()
        .iter()
        .filter(|&&(u, v)| !g.are_twins(u, v) && sets[u] == sets[v])
        .map(|&(u, v)| same_set(u, v, true, &sets[u]))
        .collect();
    VerificationReport::from_violations(Mode::Rlid, violations)
}

/// Short-circuiting form of [`verify_rlid`].
pub fn is_rlid(g: &Graph, c: &Coloring) -> bool {
    let sets = color_sets(g, c);
    g.edges()
        .iter()
        .all(|&(u, v)| g.are_twins(u, v) || sets[u] != sets[v])
}

/// Proper, and every edge separated by color sets. Adjacent twins are
/// reported as structural violations.
pub fn verify_lid(g: &Graph, c: &Coloring) -> VerificationReport {
    let sets = color_sets(g, c);
    let mut violations = Vec::new();
    for &(u, v) in g.edges() {
        if g.are_twins(u, v) {
            violations.push(Violation {
                u,
                v,
                adjacent: true,
                kind: ViolationKind::Twins,
            });
            continue;
        }
        if c.color(u) == c.color(v) {
            violations.push(Violation {
                u,
                v,
                adjacent: true,
                kind: ViolationKind::MonochromaticEdge { color: c.color(u) },
            });
        }
        if sets[u] == sets[v] {
            violations.push(same_set(u, v, true, &sets[u]));
        }
    }
    VerificationReport::from_violations(Mode::Lid, violations)
}

/// Every pair of vertices, adjacent or not, sees distinct color sets. A graph
/// with twins fails immediately with the twin pairs as witnesses.
pub fn verify_id(g: &Graph, c: &Coloring) -> VerificationReport {
    let twins: Vec<Violation> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| g.are_twins(u, v))
        .map(|&(u, v)| Violation {
            u,
            v,
            adjacent: true,
            kind: ViolationKind::Twins,
        })
        .collect();
    if !twins.is_empty() {
        return VerificationReport::from_violations(Mode::Id, twins);
    }
    let sets = color_sets(g, c);
    let mut violations = Vec::new();
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if sets[u] == sets[v] {
                violations.push(same_set(u, v, g.is_adjacent(u, v), &sets[u]));
            }
        }
    }
    VerificationReport::from_violations(Mode::Id, violations)
}

pub fn verify_proper(g: &Graph, c: &Coloring) -> VerificationReport {
    assert_eq!(c.len(), g.order(), "coloring must be total on the graph");
    let violations = g
        .edges()
        .iter()
        .filter(|&&(u, v)| c.color(u) == c.color(v))
        .map(|&(u, v)| Violation {
            u,
            v,
            adjacent: true,
            kind: ViolationKind::MonochromaticEdge { color: c.color(u) },
        })
        .collect();
    VerificationReport::from_violations(Mode::Proper, violations)
}

/// `code` must dominate every vertex and give pairwise distinct traces
/// `N[v] ∩ code`.
pub fn verify_identifying_code(g: &Graph, code: &[Vertex]) -> VerificationReport {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for &v in code {
        mask.insert(v);
    }
    let traces: Vec<FixedBitSet> = g
        .vertices()
        .map(|v| {
            let mut t = g.closed_neighborhood(v).clone();
            t.intersect_with(&mask);
            t
        })
        .collect();
    let mut violations = Vec::new();
    for v in g.vertices() {
        if traces[v].is_clear() {
            violations.push(Violation {
                u: v,
                v,
                adjacent: false,
                kind: ViolationKind::Undominated,
            });
        }
    }
    for u in g.vertices() {
        for v in u + 1..g.order() {
            if traces[u] == traces[v] {
                violations.push(Violation {
                    u,
                    v,
                    adjacent: g.is_adjacent(u, v),
                    kind: ViolationKind::SameCodeTrace {
                        trace: traces[u].ones().collect(),
                    },
                });
            }
        }
    }
    VerificationReport::from_violations(Mode::IdCode, violations)
}

/// Dispatches on `mode`; `IdCode` is not a coloring mode and is rejected.
pub fn verify(g: &Graph, c: &Coloring, mode: Mode) -> Result<VerificationReport, Error> {
    c.check_total(g)?;
    match mode {
        Mode::Rlid => Ok(verify_rlid(g, c)),
        Mode::Lid => Ok(verify_lid(g, c)),
        Mode::Id => Ok(verify_id(g, c)),
        Mode::Proper => Ok(verify_proper(g, c)),
        Mode::IdCode => Err(Error::InvalidParameter(
            "id-code verification takes a vertex set, not a coloring".into(),
        )),
    }
}
