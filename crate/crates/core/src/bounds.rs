//! Structural lower and upper bounds on the rlid-chromatic number, and the
//! recognition of graphs that need one color per vertex.

use serde::Serialize;

use crate::budget::Budget;
use crate::clique::max_clique_size;
use crate::constructions::families::power_path;
use crate::constructions::split::{find_split_partition, SplitPartition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::is_isomorphic;
use crate::solver::gamma_id_exact;

/// `ceil(log2 x)`, with `ceil_log2(0) = ceil_log2(1) = 0`.
pub fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    LogOmegaQuotient,
    NoTwoRule,
    OneColorRule,
    SplitLower,
    OrderN,
    GammaIdPlus1,
    Bipartite3,
    SplitOmegaPlus2,
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub provenance: Provenance,
    /// The hypothesis that was checked before the bound was recorded.
    pub hypothesis: String,
}

/// A bound that applied in principle but could not be evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub provenance: Provenance,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    pub skipped: Vec<Skipped>,
    pub best_lower: usize,
    pub best_upper: usize,
    pub exact: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundsOptions {
    pub budget: Budget,
    /// Used instead of searching for a split partition.
    pub split_partition: Option<SplitPartition>,
}

/// `ceil(log2 ω(G/R)) + 1`.
pub fn lower_bound_log_omega(g: &Graph, budget: &Budget) -> Result<usize> {
    if g.order() == 0 {
        return Ok(0);
    }
    let (q, _) = g.quotient();
    Ok(ceil_log2(max_clique_size(&q, budget)?) + 1)
}

/// `ceil(log2 ω) + 2` for a connected twin-free split graph on at least two
/// vertices.
pub fn split_lower_bound(g: &Graph, part: &SplitPartition, budget: &Budget) -> Result<usize> {
    part.validate(g)?;
    if g.order() < 2 {
        return Err(Error::OrderTooSmall { order: g.order(), min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v)) = g.find_twins() {
        return Err(Error::Twins(u, v));
    }
    Ok(ceil_log2(max_clique_size(g, budget)?) + 2)
}

/// Every bound whose hypothesis `g` satisfies. Evaluation failures are
/// recorded under `skipped` and never abort the report.
pub fn bounds_report(g: &Graph, opts: &BoundsOptions) -> BoundsReport {
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut skipped = Vec::new();
    let n = g.order();
    let bound = |value, provenance, hypothesis: &str| Bound {
        value,
        provenance,
        hypothesis: hypothesis.to_string(),
    };

    if n == 0 {
        return finish(
            vec![bound(0, Provenance::OrderN, "empty graph")],
            vec![bound(0, Provenance::OrderN, "empty graph")],
            skipped,
        );
    }

    match lower_bound_log_omega(g, &opts.budget) {
        Ok(v) => lower.push(bound(v, Provenance::LogOmegaQuotient, "any graph")),
        Err(e) => skipped.push(Skipped {
            provenance: Provenance::LogOmegaQuotient,
            reason: e.to_string(),
        }),
    }
    if g.is_clique_union() {
        lower.push(bound(1, Provenance::OneColorRule, "every component is a clique"));
        upper.push(bound(1, Provenance::OneColorRule, "every component is a clique"));
    } else {
        lower.push(bound(3, Provenance::NoTwoRule, "some component is not a clique"));
    }
    upper.push(bound(n, Provenance::OrderN, "any graph (distinct colors separate non-twins)"));

    let twin_free = g.is_twin_free();
    if twin_free {
        match gamma_id_exact(g, &opts.budget) {
            Ok(r) if r.is_exact() => upper.push(bound(r.value + 1, Provenance::GammaIdPlus1, "twin-free")),
            Ok(r) => skipped.push(Skipped {
                provenance: Provenance::GammaIdPlus1,
                reason: format!("identifying code search exceeded its budget after {} nodes", r.stats.nodes),
            }),
            Err(e) => skipped.push(Skipped {
                provenance: Provenance::GammaIdPlus1,
                reason: e.to_string(),
            }),
        }
    }
    if n >= 3 && g.is_bipartite() {
        upper.push(bound(3, Provenance::Bipartite3, "bipartite, order at least 3"));
    }

    let partition = match &opts.split_partition {
        Some(p) => p.validate(g).map(|_| p.clone()),
        None => find_split_partition(g),
    };
    match partition {
        Ok(p) if n >= 2 && twin_free && g.is_connected() => {
            let omega = p.maximalized(g).clique.len();
            let hyp = "connected twin-free split graph, order at least 2";
            lower.push(bound(ceil_log2(omega) + 2, Provenance::SplitLower, hyp));
            upper.push(bound(omega + 2, Provenance::SplitOmegaPlus2, hyp));
        }
        Ok(_) | Err(Error::NotSplit) => {}
        Err(e) => skipped.push(Skipped {
            provenance: Provenance::SplitOmegaPlus2,
            reason: e.to_string(),
        }),
    }

    let (q, part) = g.quotient();
    if part.t > 0 {
        let inner = bounds_report(
            &q,
            &BoundsOptions {
                budget: opts.budget,
                split_partition: None,
            },
        );
        upper.push(bound(
            inner.best_upper,
            Provenance::Quotient,
            "upper bound of the twin quotient",
        ));
        if inner.best_lower > part.t {
            lower.push(bound(
                inner.best_lower - part.t,
                Provenance::Quotient,
                "lower bound of the twin quotient minus t",
            ));
        }
    }
    finish(lower, upper, skipped)
}

fn finish(lower: Vec<Bound>, upper: Vec<Bound>, skipped: Vec<Skipped>) -> BoundsReport {
    let best_lower = lower.iter().map(|b| b.value).max().unwrap_or(0);
    let best_upper = upper.iter().map(|b| b.value).min().unwrap_or(usize::MAX);
    BoundsReport {
        exact: (best_lower == best_upper).then_some(best_lower),
        lower,
        upper,
        skipped,
        best_lower,
        best_upper,
    }
}

/// Whether `g` is a universal vertex joined with a graph whose join factors
/// (the components of its complement) are each the edgeless graph on two
/// vertices or a path power `P^{k-1}_{2k}`, `k >= 2`.
/// `K_1` itself qualifies as the empty join.
pub fn characterize_full_palette(g: &Graph, budget: &Budget) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some((u, v)) = g.find_twins() {
        return Err(Error::Twins(u, v));
    }
    if g.order() <= 1 {
        return Ok(true);
    }
    let Some(&u) = g.universal_vertices().first() else {
        return Ok(false);
    };
    let rest: Vec<_> = g.vertices().filter(|&v| v != u).collect();
    let h = g.induced_subgraph(&rest);
    for factor in h.complement().components() {
        let f = h.induced_subgraph(&factor);
        let ok = match f.order() {
            2 => f.size() == 0,
            k if k >= 4 && k % 2 == 0 => is_isomorphic(&f, &power_path(k / 2)?, budget)?,
            _ => false,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::families::{h_p, q1, q2};

    #[test]
    fn log2_ceiling() {
        assert_eq!(
            (1..=9).map(ceil_log2).collect::<Vec<_>>(),
            vec![0, 1, 2, 2, 3, 3, 3, 3, 4]
        );
    }

    #[test]
    fn log_omega_examples() {
        let b = Budget::default();
        assert_eq!(lower_bound_log_omega(&h_p(2).unwrap().graph, &b).unwrap(), 3);
        assert_eq!(lower_bound_log_omega(&Graph::complete(6), &b).unwrap(), 1);
        assert_eq!(lower_bound_log_omega(&Graph::complete(5).join(&Graph::empty(1)), &b).unwrap(), 1);
        let pendant_clique = Graph::new(
            7,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (0, 5), (1, 6)],
        )
        .unwrap();
        // 0 and 1 carry pendants, so the quotient keeps 0, 1, one of {2,3,4}
        // and the pendants: ω(G/R) = 3.
        assert_eq!(lower_bound_log_omega(&pendant_clique, &b).unwrap(), 3);
    }

    #[test]
    fn report_examples() {
        let p4 = bounds_report(&Graph::path(4), &BoundsOptions::default());
        assert_eq!(p4.exact, Some(3));
        let k5 = bounds_report(&Graph::complete(5), &BoundsOptions::default());
        assert_eq!(k5.exact, Some(1));
        let q = bounds_report(&q2(3).unwrap().graph, &BoundsOptions::default());
        assert_eq!(q.best_lower, 4);
        assert!(q.upper.iter().any(|b| b.provenance == Provenance::SplitOmegaPlus2 && b.value == 5));
    }

    #[test]
    fn split_lower_examples() {
        let b = Budget::default();
        let g = q1(3).unwrap().graph;
        let p = find_split_partition(&g).unwrap();
        assert_eq!(split_lower_bound(&g, &p, &b).unwrap(), 4);
        for (p, expected) in [(3, 4), (4, 4)] {
            let g = q2(p).unwrap().graph;
            let part = find_split_partition(&g).unwrap();
            assert_eq!(split_lower_bound(&g, &part, &b).unwrap(), expected);
        }
    }

    #[test]
    fn full_palette_examples() {
        let b = Budget::default();
        assert!(characterize_full_palette(&Graph::path(3), &b).unwrap());
        let fan = Graph::empty(1).join(&Graph::path(4));
        assert!(characterize_full_palette(&fan, &b).unwrap());
        assert!(!characterize_full_palette(&Graph::cycle(5), &b).unwrap());
        assert_eq!(characterize_full_palette(&Graph::complete(3), &b), Err(Error::Twins(0, 1)));
    }
}
