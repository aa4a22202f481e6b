//! Batch evaluation of graph parameters over enumerated or seeded families,
//! with a small assertion language such as `rlid <= 3` or `rlid <= gammaid + 1`.
//!
//! Graphs are processed on a rayon pool; rows come back in generation order
//! regardless of scheduling.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::clique::max_clique_size;
use crate::error::{Error, Result};
use crate::generate::{enumerate_graphs, enumerate_nonisomorphic, plant_twins, random_connected_graph, random_split_graph, GraphClass};
use crate::graph::Graph;
use crate::solver::{chi_exact, gamma_id_exact, Parameter, SolveOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Metric {
    N,
    Omega,
    Rlid,
    Lid,
    Id,
    Chromatic,
    GammaId,
}

impl Metric {
    pub const ALL: [Metric; 7] = [
        Metric::N,
        Metric::Omega,
        Metric::Rlid,
        Metric::Lid,
        Metric::Id,
        Metric::Chromatic,
        Metric::GammaId,
    ];
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::N => "n",
            Metric::Omega => "omega",
            Metric::Rlid => "rlid",
            Metric::Lid => "lid",
            Metric::Id => "id",
            Metric::Chromatic => "chromatic",
            Metric::GammaId => "gammaid",
        })
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Metric::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .or_else(|| (s == "chi").then_some(Metric::Chromatic))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown metric `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricValue {
    Value(i64),
    /// The parameter is undefined on this graph (e.g. `id` with twins).
    Undefined,
    Budget,
}

impl fmt::Display for MetricValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricValue::Value(v) => write!(f, "{v}"),
            MetricValue::Undefined => f.write_str("NA"),
            MetricValue::Budget => f.write_str("budget"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Term {
    Metric(Metric),
    Const(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
    Ne,
}

impl CmpOp {
    fn holds(self, a: i64, b: i64) -> bool {
        match self {
            CmpOp::Le => a <= b,
            CmpOp::Lt => a < b,
            CmpOp::Ge => a >= b,
            CmpOp::Gt => a > b,
            CmpOp::Eq => a == b,
            CmpOp::Ne => a != b,
        }
    }
}

/// Signed sum of terms.
type Expr = Vec<(i64, Term)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assertion {
    pub text: String,
    lhs: Expr,
    op: CmpOp,
    rhs: Expr,
}

impl Assertion {
    pub fn metrics(&self) -> impl Iterator<Item = Metric> + '_ {
        self.lhs.iter().chain(&self.rhs).filter_map(|(_, t)| match t {
            Term::Metric(m) => Some(*m),
            Term::Const(_) => None,
        })
    }

    /// `None` when a referenced metric has no value.
    pub fn evaluate(&self, lookup: impl Fn(Metric) -> Option<i64>) -> Option<bool> {
        let eval = |e: &Expr| -> Option<i64> {
            e.iter().try_fold(0i64, |acc, &(sign, t)| {
                let v = match t {
                    Term::Metric(m) => lookup(m)?,
                    Term::Const(c) => c,
                };
                Some(acc + sign * v)
            })
        };
        Some(self.op.holds(eval(&self.lhs)?, eval(&self.rhs)?))
    }
}

impl FromStr for Assertion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidParameter(format!("assertion `{s}`: {msg}"));
        let ops = [("<=", CmpOp::Le), (">=", CmpOp::Ge), ("==", CmpOp::Eq), ("!=", CmpOp::Ne), ("<", CmpOp::Lt), (">", CmpOp::Gt)];
        let (pos, text, op) = ops
            .iter()
            .filter_map(|&(t, op)| s.find(t).map(|p| (p, t, op)))
            .min_by_key(|&(p, t, _)| (p, std::cmp::Reverse(t.len())))
            .ok_or_else(|| bad("missing comparison"))?;
        let lhs = parse_expr(&s[..pos]).ok_or_else(|| bad("malformed left side"))?;
        let rhs = parse_expr(&s[pos + text.len()..]).ok_or_else(|| bad("malformed right side"))?;
        Ok(Assertion {
            text: s.trim().to_string(),
            lhs,
            op,
            rhs,
        })
    }
}

fn parse_expr(s: &str) -> Option<Expr> {
    let mut expr = Vec::new();
    let mut sign = 1;
    let mut expect_term = true;
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '+' || c == '-' {
            if expect_term {
                return None;
            }
            sign = if c == '+' { 1 } else { -1 };
            expect_term = true;
            chars.next();
        } else if c.is_ascii_alphanumeric() {
            if !expect_term {
                return None;
            }
            let mut token = String::new();
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_alphanumeric()) {
                token.push(c);
                chars.next();
            }
            let term = match token.parse::<i64>() {
                Ok(v) => Term::Const(v),
                Err(_) => Term::Metric(token.parse().ok()?),
            };
            expr.push((sign, term));
            expect_term = false;
        } else {
            return None;
        }
    }
    (!expect_term).then_some(expr)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Every labeled graph of each order in the range that passes the filter.
    Enumerated {
        class: GraphClass,
        min_n: usize,
        max_n: usize,
        /// Keep one graph per isomorphism class.
        unlabeled: bool,
    },
    /// Seeds `seed..seed + count`.
    RandomSplit {
        count: usize,
        seed: u64,
        clique_size: usize,
        stable_size: usize,
        edge_prob: f64,
    },
    /// Random connected graph on `base_n` vertices with `twins` planted twins.
    RandomTwins {
        count: usize,
        seed: u64,
        base_n: usize,
        twins: usize,
    },
}

impl Family {
    pub fn generate(&self) -> Result<Vec<Graph>> {
        match *self {
            Family::Enumerated {
                class,
                min_n,
                max_n,
                unlabeled,
            } => {
                let mut out = Vec::new();
                for n in min_n..=max_n {
                    if unlabeled {
                        out.extend(enumerate_nonisomorphic(n, |g| class.admits(g))?);
                    } else {
                        out.extend(enumerate_graphs(n, |g| class.admits(g))?);
                    }
                }
                Ok(out)
            }
            Family::RandomSplit {
                count,
                seed,
                clique_size,
                stable_size,
                edge_prob,
            } => (seed..seed + count as u64)
                .map(|s| random_split_graph(s, clique_size, stable_size, edge_prob, true).map(|(g, _)| g))
                .collect(),
            Family::RandomTwins {
                count,
                seed,
                base_n,
                twins,
            } => Ok((seed..seed + count as u64)
                .map(|s| plant_twins(&random_connected_graph(s, base_n, 0.4), s.wrapping_add(1 << 32), twins))
                .collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub family: Family,
    /// Columns to report; metrics used by assertions are added.
    pub metrics: Vec<Metric>,
    pub assertions: Vec<Assertion>,
    pub budget: Budget,
    /// Worker count; `None` uses rayon's default.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// Some assertion referenced a value that is undefined or out of budget.
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub id: usize,
    pub graph: Graph,
    pub values: Vec<MetricValue>,
    pub verdict: Verdict,
    /// Texts of the assertions that evaluated to false.
    pub failed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub columns: Vec<Metric>,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == verdict).count()
    }

    /// Header plus one row per graph.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("id\tm");
        for c in &self.columns {
            write!(out, "\t{c}").unwrap();
        }
        out.push_str("\tverdict\tedges\n");
        for row in &self.rows {
            write!(out, "{}\t{}", row.id, row.graph.size()).unwrap();
            for v in &row.values {
                write!(out, "\t{v}").unwrap();
            }
            let edges: Vec<String> = row.graph.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
            writeln!(out, "\t{}\t{}", row.verdict, edges.join(",")).unwrap();
        }
        out
    }
}

pub fn evaluate_metric(g: &Graph, metric: Metric, budget: &Budget) -> MetricValue {
    let opts = SolveOptions::with_budget(*budget);
    let from = |r: Result<crate::solver::SolveResult>| match r {
        Ok(r) if r.is_exact() => MetricValue::Value(r.value as i64),
        Ok(_) | Err(Error::BudgetExceeded { .. }) => MetricValue::Budget,
        Err(_) => MetricValue::Undefined,
    };
    match metric {
        Metric::N => MetricValue::Value(g.order() as i64),
        Metric::Omega => match max_clique_size(g, budget) {
            Ok(w) => MetricValue::Value(w as i64),
            Err(_) => MetricValue::Budget,
        },
        Metric::Rlid => from(chi_exact(g, Parameter::Rlid, &opts)),
        Metric::Lid => from(chi_exact(g, Parameter::Lid, &opts)),
        Metric::Id => from(chi_exact(g, Parameter::Id, &opts)),
        Metric::Chromatic => from(chi_exact(g, Parameter::Chromatic, &opts)),
        Metric::GammaId => from(gamma_id_exact(g, budget)),
    }
}

fn evaluate_row(id: usize, graph: Graph, cfg: &SweepConfig, columns: &[Metric]) -> SweepRow {
    let values: Vec<MetricValue> = columns.iter().map(|&m| evaluate_metric(&graph, m, &cfg.budget)).collect();
    let lookup = |m: Metric| match &values[columns.iter().position(|&c| c == m).expect("column present")] {
        MetricValue::Value(v) => Some(*v),
        _ => None,
    };
    let mut failed = Vec::new();
    let mut unknown = false;
    for a in &cfg.assertions {
        match a.evaluate(lookup) {
            Some(true) => {}
            Some(false) => failed.push(a.text.clone()),
            None => unknown = true,
        }
    }
    let verdict = if !failed.is_empty() {
        Verdict::Fail
    } else if unknown {
        Verdict::Unknown
    } else {
        Verdict::Pass
    };
    SweepRow {
        id,
        graph,
        values,
        verdict,
        failed,
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut columns: Vec<Metric> = vec![Metric::N];
    columns.extend(cfg.metrics.iter().copied());
    columns.extend(cfg.assertions.iter().flat_map(|a| a.metrics()));
    columns.sort_unstable();
    columns.dedup();
    let graphs = cfg.family.generate()?;
    let work = || -> Vec<SweepRow> {
        graphs
            .into_par_iter()
            .enumerate()
            .map(|(i, g)| evaluate_row(i, g, cfg, &columns))
            .collect()
    };
    let rows = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(work),
        None => work(),
    };
    Ok(SweepReport { columns, rows })
}
