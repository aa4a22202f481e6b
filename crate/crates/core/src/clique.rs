//! Exact maximum clique by branch and bound.
//!
//! Candidates are expanded in an order produced by greedy sequential coloring;
//! a candidate whose color class index plus the current clique size cannot beat
//! the incumbent is pruned together with everything before it.

use fixedbitset::FixedBitSet;

use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// A maximum clique, lexicographically first among those the search meets.
pub fn max_clique(g: &Graph, budget: &Budget) -> Result<Vec<Vertex>> {
    if g.order() == 0 {
        return Ok(Vec::new());
    }
    let mut search = CliqueSearch {
        g,
        best: vec![0],
        meter: budget.meter(),
    };
    let mut current = Vec::new();
    let mut candidates = FixedBitSet::with_capacity(g.order());
    candidates.insert_range(..);
    search.expand(&mut current, candidates)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// ω(G).
pub fn max_clique_size(g: &Graph, budget: &Budget) -> Result<usize> {
    Ok(max_clique(g, budget)?.len())
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<Vertex>,
    meter: Meter,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: &mut Vec<Vertex>, mut candidates: FixedBitSet) -> Result<()> {
        let (order, bounds) = self.color_sort(&candidates);
        for i in (0..order.len()).rev() {
            self.meter.tick()?;
            if current.len() + bounds[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(self.g.open_neighborhood(v));
            if next.is_clear() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next)?;
            }
            current.pop();
            candidates.set(v, false);
        }
        Ok(())
    }

    /// Greedy coloring of the candidates; returns them grouped by color with
    /// the running color count as an upper bound on the clique within.
    fn color_sort(&self, candidates: &FixedBitSet) -> (Vec<Vertex>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut order = Vec::with_capacity(candidates.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.minimum() {
                available.set(v, false);
                available.difference_with(self.g.open_neighborhood(v));
                uncolored.set(v, false);
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn small_values() {
        let b = Budget::default();
        assert_eq!(max_clique_size(&Graph::complete(5), &b).unwrap(), 5);
        assert_eq!(max_clique_size(&Graph::cycle(5), &b).unwrap(), 2);
        assert_eq!(max_clique_size(&Graph::empty(3), &b).unwrap(), 1);
        assert_eq!(max_clique_size(&Graph::empty(0), &b).unwrap(), 0);
    }

    #[test]
    fn finds_planted_clique() {
        let mut edges = Graph::cycle(9).edges().to_vec();
        for &(u, v) in &[(2, 5), (2, 7), (5, 7), (3, 5), (3, 7), (2, 4)] {
            edges.push((u, v));
        }
        let g = Graph::new(9, &edges).unwrap();
        let c = max_clique(&g, &Budget::default()).unwrap();
        assert!(g.is_clique(&c));
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::complete(12).disjoint_union(&Graph::cycle(20));
        let err = max_clique_size(&g, &Budget::nodes(2)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }
}
