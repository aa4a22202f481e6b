//! Exact decision and optimization procedures for the coloring parameters and
//! the identifying code number.
//!
//! Optimization is iterative deepening over the palette size. Every optimum is
//! returned with a witness that passes the matching verifier, and a search
//! that runs out of budget says so instead of returning a guess.

mod code;
mod search;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use code::gamma_id_exact;
pub use search::{VertexOrder, MAX_SEARCH_PALETTE};

use crate::budget::{Budget, Meter};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use search::Problem;

/// Graph parameter computed by the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parameter {
    Rlid,
    Lid,
    Id,
    Chromatic,
    GammaId,
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parameter::Rlid => "rlid",
            Parameter::Lid => "lid",
            Parameter::Id => "id",
            Parameter::Chromatic => "chromatic",
            Parameter::GammaId => "gamma-id",
        })
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rlid" => Ok(Parameter::Rlid),
            "lid" => Ok(Parameter::Lid),
            "id" => Ok(Parameter::Id),
            "chromatic" | "chi" => Ok(Parameter::Chromatic),
            "gamma-id" | "gammaid" => Ok(Parameter::GammaId),
            other => Err(Error::InvalidParameter(format!("unknown parameter `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Coloring(Coloring),
    Code(Vec<Vertex>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Outcome of an exact optimization.
///
/// With status `Exact`, `value` is the optimum and `witness` attains it. With
/// `BudgetExceeded`, `value` is the smallest candidate not yet refuted (a
/// proven lower bound) and there is no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub parameter: Parameter,
    pub value: usize,
    pub witness: Option<Witness>,
    pub stats: SolveStats,
    pub status: Status,
}

impl SolveResult {
    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.witness {
            Some(Witness::Coloring(c)) => Some(c),
            _ => None,
        }
    }

    pub fn code(&self) -> Option<&[Vertex]> {
        match &self.witness {
            Some(Witness::Code(c)) => Some(c),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: Budget,
    /// Skip palette 2 for rlid once palette 1 fails; no graph has
    /// rlid-number 2. Turn off to test that fact rather than assume it.
    pub skip_two: bool,
    pub order: VertexOrder,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Budget::default(),
            skip_two: true,
            order: VertexOrder::default(),
        }
    }
}

impl SolveOptions {
    pub fn with_budget(budget: Budget) -> Self {
        SolveOptions {
            budget,
            ..Default::default()
        }
    }

    pub fn exhaustive() -> Self {
        SolveOptions {
            skip_two: false,
            ..Default::default()
        }
    }
}

fn rlid_pairs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    g.edges()
        .iter()
        .copied()
        .filter(|&(u, v)| !g.are_twins(u, v))
        .collect()
}

fn require_twin_free(g: &Graph) -> Result<()> {
    match g.find_twins() {
        Some((u, v)) => Err(Error::Twins(u, v)),
        None => Ok(()),
    }
}

fn problem(g: &Graph, parameter: Parameter) -> Result<Problem<'_>> {
    Ok(match parameter {
        Parameter::Rlid => Problem {
            graph: g,
            pairs: rlid_pairs(g),
            proper: false,
        },
        Parameter::Lid => {
            require_twin_free(g)?;
            Problem {
                graph: g,
                pairs: g.edges().to_vec(),
                proper: true,
            }
        }
        Parameter::Id => {
            require_twin_free(g)?;
            Problem {
                graph: g,
                pairs: g
                    .vertices()
                    .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
                    .collect(),
                proper: false,
            }
        }
        Parameter::Chromatic => Problem {
            graph: g,
            pairs: Vec::new(),
            proper: true,
        },
        Parameter::GammaId => {
            return Err(Error::InvalidParameter(
                "gamma-id is not a coloring parameter; use gamma_id_exact".into(),
            ))
        }
    })
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("palette size must be at least 1".into()));
    }
    Ok(())
}

/// A coloring of `g` with at most `k` colors valid for `parameter`, or
/// `None` if none exists.
pub fn decide_k(g: &Graph, parameter: Parameter, k: u32, opts: &SolveOptions) -> Result<Option<Coloring>> {
    check_k(k)?;
    let mut meter = opts.budget.meter();
    decide_with(g, parameter, k, opts.order, &mut meter)
}

fn decide_with(
    g: &Graph,
    parameter: Parameter,
    k: u32,
    order: VertexOrder,
    meter: &mut Meter,
) -> Result<Option<Coloring>> {
    let p = problem(g, parameter)?;
    if k as usize >= g.order() && k > MAX_SEARCH_PALETTE {
        // A rainbow coloring satisfies every parameter the preconditions admit.
        return Ok(Some(Coloring::rainbow(g.order()).with_palette(k)?));
    }
    p.solve(k, order, meter)
}

/// k-rlid decision.
pub fn decide_k_rlid(g: &Graph, k: u32, opts: &SolveOptions) -> Result<Option<Coloring>> {
    decide_k(g, Parameter::Rlid, k, opts)
}

/// Proper k-coloring decision.
pub fn decide_k_proper(g: &Graph, k: u32, opts: &SolveOptions) -> Result<Option<Coloring>> {
    decide_k(g, Parameter::Chromatic, k, opts)
}

/// Exact value of a coloring parameter by iterative deepening.
///
/// `Rlid`, `Lid` and `Chromatic` only constrain adjacent vertices, so they are
/// solved per connected component and combined by maximum. `Id` also
/// constrains non-adjacent pairs and is solved on the whole graph.
pub fn chi_exact(g: &Graph, parameter: Parameter, opts: &SolveOptions) -> Result<SolveResult> {
    if parameter == Parameter::GammaId {
        return gamma_id_exact(g, &opts.budget);
    }
    // Precondition errors surface before any search.
    problem(g, parameter)?;
    let start = Instant::now();
    let mut meter = opts.budget.meter();
    let outcome = if parameter == Parameter::Id {
        deepen(g, parameter, opts, &mut meter)
    } else {
        by_components(g, parameter, opts, &mut meter)
    };
    let stats = SolveStats {
        nodes: meter.nodes(),
        elapsed: start.elapsed(),
    };
    Ok(match outcome? {
        Deepened::Solved(value, coloring) => SolveResult {
            parameter,
            value,
            witness: Some(Witness::Coloring(coloring)),
            stats,
            status: Status::Exact,
        },
        Deepened::OutOfBudget(lower) => SolveResult {
            parameter,
            value: lower,
            witness: None,
            stats,
            status: Status::BudgetExceeded,
        },
    })
}

enum Deepened {
    Solved(usize, Coloring),
    OutOfBudget(usize),
}

fn by_components(g: &Graph, parameter: Parameter, opts: &SolveOptions, meter: &mut Meter) -> Result<Deepened> {
    let mut colors = vec![0u32; g.order()];
    let mut value = 0usize;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        match deepen(&sub, parameter, opts, meter)? {
            Deepened::Solved(v, c) => {
                value = value.max(v);
                for (i, &w) in comp.iter().enumerate() {
                    colors[w] = c.color(i);
                }
            }
            Deepened::OutOfBudget(lower) => return Ok(Deepened::OutOfBudget(value.max(lower))),
        }
    }
    Ok(Deepened::Solved(value, Coloring::new(colors, value as u32)?))
}

fn deepen(g: &Graph, parameter: Parameter, opts: &SolveOptions, meter: &mut Meter) -> Result<Deepened> {
    if g.order() == 0 {
        return Ok(Deepened::Solved(0, Coloring::uniform(0, 1)));
    }
    let mut k = 1u32;
    loop {
        if parameter == Parameter::Rlid && k == 2 && opts.skip_two {
            k = 3;
        }
        match decide_with(g, parameter, k, opts.order, meter) {
            Ok(Some(c)) => return Ok(Deepened::Solved(k as usize, c)),
            Ok(None) => k += 1,
            Err(Error::BudgetExceeded { .. }) => return Ok(Deepened::OutOfBudget(k as usize)),
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_rlid, verify_id, verify_lid, verify_proper};

    fn rlid(g: &Graph) -> usize {
        chi_exact(g, Parameter::Rlid, &SolveOptions::exhaustive()).unwrap().value
    }

    #[test]
    fn decide_examples() {
        let o = SolveOptions::default();
        let k3 = decide_k_rlid(&Graph::complete(3), 1, &o).unwrap().unwrap();
        assert_eq!(k3.colors(), &[1, 1, 1]);
        assert_eq!(decide_k_rlid(&Graph::path(4), 2, &o).unwrap(), None);
        let c4 = decide_k_rlid(&Graph::cycle(4), 3, &o).unwrap().unwrap();
        assert!(is_rlid(&Graph::cycle(4), &c4));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(rlid(&Graph::path(3)), 3);
        assert_eq!(rlid(&Graph::path(4)), 3);
        assert_eq!(rlid(&Graph::complete(4)), 1);
        assert_eq!(rlid(&Graph::empty(0)), 0);
        let o = SolveOptions::default();
        assert_eq!(chi_exact(&Graph::complete(4), Parameter::Chromatic, &o).unwrap().value, 4);
        assert_eq!(chi_exact(&Graph::cycle(5), Parameter::Chromatic, &o).unwrap().value, 3);
    }

    #[test]
    fn witnesses_verify() {
        let g = Graph::cycle(6);
        let o = SolveOptions::default();
        let lid = chi_exact(&g, Parameter::Lid, &o).unwrap();
        assert!(verify_lid(&g, lid.coloring().unwrap()).valid);
        let id = chi_exact(&g, Parameter::Id, &o).unwrap();
        assert!(verify_id(&g, id.coloring().unwrap()).valid);
        let chi = chi_exact(&g, Parameter::Chromatic, &o).unwrap();
        assert!(verify_proper(&g, chi.coloring().unwrap()).valid);
        assert_eq!(chi.value, 2);
    }

    #[test]
    fn disconnected_takes_maximum() {
        let g = Graph::path(4).disjoint_union(&Graph::complete(3));
        let r = chi_exact(&g, Parameter::Rlid, &SolveOptions::default()).unwrap();
        assert_eq!(r.value, 3);
        assert!(is_rlid(&g, r.coloring().unwrap()));
    }

    #[test]
    fn preconditions_are_named() {
        let o = SolveOptions::default();
        assert_eq!(chi_exact(&Graph::complete(2), Parameter::Id, &o), Err(Error::Twins(0, 1)));
        assert_eq!(chi_exact(&Graph::complete(3), Parameter::Lid, &o), Err(Error::Twins(0, 1)));
        assert!(decide_k_rlid(&Graph::path(3), 0, &o).is_err());
    }

    #[test]
    fn budget_exhaustion_is_not_an_answer() {
        let g = Graph::cycle(9).join(&Graph::cycle(7));
        let opts = SolveOptions::with_budget(Budget::nodes(50));
        let r = chi_exact(&g, Parameter::Rlid, &opts).unwrap();
        assert_eq!(r.status, Status::BudgetExceeded);
        assert!(r.witness.is_none());
        assert!(matches!(
            decide_k_rlid(&g, 3, &SolveOptions::with_budget(Budget::nodes(1))),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
