use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::{Parameter, SolveResult, SolveStats, Status, Witness};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Minimum identifying code.
///
/// Components are independent, so the optimum is the union of per-component
/// optima. Within a component, candidate sizes run upward from
/// `max(ceil(log2(n + 1)), |forced|)`, where a vertex is forced when it is the
/// whole symmetric difference `N[u] △ N[v]` of some pair. Subsets of each size
/// are visited in lexicographic order, so the witness is the lexicographically
/// first optimal code.
pub fn gamma_id_exact(g: &Graph, budget: &Budget) -> Result<SolveResult> {
    if let Some((u, v)) = g.find_twins() {
        return Err(Error::Twins(u, v));
    }
    let start = Instant::now();
    let mut meter = budget.meter();
    let mut code = Vec::new();
    let mut status = Status::Exact;
    let mut value = 0;
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        match component_code(&sub, &mut meter) {
            Ok(c) => {
                value += c.len();
                code.extend(c.into_iter().map(|i| comp[i]));
            }
            Err(Error::BudgetExceeded { .. }) => {
                status = Status::BudgetExceeded;
                value += counting_bound(sub.order());
            }
            Err(e) => return Err(e),
        }
    }
    code.sort_unstable();
    Ok(SolveResult {
        parameter: Parameter::GammaId,
        value,
        witness: (status == Status::Exact).then_some(Witness::Code(code)),
        stats: SolveStats {
            nodes: meter.nodes(),
            elapsed: start.elapsed(),
        },
        status,
    })
}

/// Smallest `s` with `2^s - 1 >= n`.
pub(crate) fn counting_bound(n: usize) -> usize {
    let mut s = 0;
    while (1usize << s) - 1 < n {
        s += 1;
    }
    s
}

/// Vertices that lie in every identifying code.
pub(crate) fn forced_vertices(g: &Graph) -> Vec<Vertex> {
    let mut forced = FixedBitSet::with_capacity(g.order());
    for u in g.vertices() {
        for v in u + 1..g.order() {
            let mut diff = g.closed_neighborhood(u).clone();
            diff.symmetric_difference_with(g.closed_neighborhood(v));
            if diff.count_ones(..) == 1 {
                forced.insert(diff.minimum().expect("one element"));
            }
        }
    }
    forced.ones().collect()
}

fn component_code(g: &Graph, meter: &mut Meter) -> Result<Vec<Vertex>> {
    let n = g.order();
    let forced = forced_vertices(g);
    let free: Vec<Vertex> = g.vertices().filter(|v| !forced.contains(v)).collect();
    let lower = counting_bound(n).max(forced.len());
    let mut search = CodeSearch {
        g,
        free: &free,
        code: FixedBitSet::with_capacity(n),
        meter,
    };
    for &v in &forced {
        search.code.insert(v);
    }
    for size in lower..=n {
        if search.choose(0, size - forced.len())? {
            return Ok(search.code.ones().collect());
        }
    }
    unreachable!("the full vertex set identifies a twin-free graph")
}

struct CodeSearch<'a, 'm> {
    g: &'a Graph,
    free: &'a [Vertex],
    code: FixedBitSet,
    meter: &'m mut Meter,
}

impl CodeSearch<'_, '_> {
    fn choose(&mut self, from: usize, remaining: usize) -> Result<bool> {
        if remaining == 0 {
            self.meter.tick()?;
            return Ok(self.identifies());
        }
        for i in from..=self.free.len() - remaining {
            let v = self.free[i];
            self.code.insert(v);
            if self.choose(i + 1, remaining - 1)? {
                return Ok(true);
            }
            self.code.set(v, false);
        }
        Ok(false)
    }

    fn identifies(&self) -> bool {
        let mut traces: Vec<FixedBitSet> = Vec::with_capacity(self.g.order());
        for v in self.g.vertices() {
            let mut t = self.g.closed_neighborhood(v).clone();
            t.intersect_with(&self.code);
            if t.is_clear() {
                return false;
            }
            traces.push(t);
        }
        traces.sort_unstable();
        traces.windows(2).all(|w| w[0] != w[1])
    }
}
