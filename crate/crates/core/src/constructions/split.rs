//! Split graphs: partition search, a separating subset of the stable side, and
//! the constructive coloring with at most `ω + 2` colors.

use serde::Serialize;

use super::ColoringSource;
use crate::budget::Budget;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solver::{decide_k_rlid, SolveOptions};
use crate::verify::is_rlid;

/// Largest order handled by [`find_split_partition`].
pub const MAX_SPLIT_SEARCH_ORDER: usize = 12;

/// Clique `K` and stable set `S` covering the graph, with an optional
/// separator `S' ⊆ S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub stable: Vec<Vertex>,
    pub separator: Option<Vec<Vertex>>,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.order()];
        for &v in self.clique.iter().chain(&self.stable) {
            if v >= g.order() {
                return Err(Error::InvalidSplitPartition(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidSplitPartition(format!("vertex {v} listed twice")));
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidSplitPartition(format!("vertex {v} not covered")));
        }
        if !g.is_clique(&self.clique) {
            return Err(Error::InvalidSplitPartition("clique side is not complete".into()));
        }
        if !g.is_stable(&self.stable) {
            return Err(Error::InvalidSplitPartition("stable side has an edge".into()));
        }
        Ok(())
    }

    /// A stable vertex adjacent to the whole clique, if any.
    pub fn full_stable_vertex(&self, g: &Graph) -> Option<Vertex> {
        self.stable
            .iter()
            .copied()
            .find(|&s| self.clique.iter().all(|&k| g.is_adjacent(s, k)))
    }

    /// Moves the least stable vertex adjacent to the whole clique (if any)
    /// into the clique. No other stable vertex can then be fully adjacent, so
    /// the clique becomes inclusion-maximal.
    pub fn maximalized(mut self, g: &Graph) -> Self {
        if let Some(s) = self.full_stable_vertex(g) {
            self.stable.retain(|&v| v != s);
            self.clique.push(s);
            self.clique.sort_unstable();
            self.separator = None;
        }
        self
    }
}

/// A split partition with a largest possible clique, found by exhaustive
/// search (ties go to the smallest clique bitmask).
pub fn find_split_partition(g: &Graph) -> Result<SplitPartition> {
    let n = g.order();
    if n > MAX_SPLIT_SEARCH_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_SPLIT_SEARCH_ORDER,
        });
    }
    let adj = g.adjacency_words().expect("order fits one word");
    let all: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut best: Option<u64> = None;
    for k in 0..=all {
        if best.is_some_and(|b| b.count_ones() >= k.count_ones()) {
            continue;
        }
        let is_clique = (0..n)
            .filter(|&v| k >> v & 1 == 1)
            .all(|v| (adj[v] | 1 << v) & k == k);
        let is_stable = (0..n)
            .filter(|&v| k >> v & 1 == 0)
            .all(|v| adj[v] & !k == 0);
        if is_clique && is_stable {
            best = Some(k);
        }
    }
    let k = best.ok_or(Error::NotSplit)?;
    Ok(SplitPartition {
        clique: (0..n).filter(|&v| k >> v & 1 == 1).collect(),
        stable: (0..n).filter(|&v| k >> v & 1 == 0).collect(),
        separator: None,
    })
}

fn check_hypotheses(g: &Graph, part: &SplitPartition) -> Result<()> {
    part.validate(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(s) = part.full_stable_vertex(g) {
        return Err(Error::NonMaximalClique(s));
    }
    if let Some((u, v)) = g.find_twins() {
        return Err(Error::Twins(u, v));
    }
    Ok(())
}

/// `S' ⊆ S` giving every clique vertex a distinct trace `N[x] ∩ S'`, with
/// `|S'| ≤ |K| - 1`.
///
/// Works by partition refinement: while some class of clique vertices with
/// equal traces has two members, the least stable vertex whose neighborhood
/// splits that class is added and every class is refined by it. Twin-freeness
/// guarantees such a vertex exists, and each addition raises the class count.
pub fn split_separator(g: &Graph, part: &SplitPartition) -> Result<Vec<Vertex>> {
    check_hypotheses(g, part)?;
    Ok(separator_unchecked(g, part))
}

fn separator_unchecked(g: &Graph, part: &SplitPartition) -> Vec<Vertex> {
    let mut classes: Vec<Vec<Vertex>> = vec![part.clique.clone()];
    let mut chosen = Vec::new();
    while let Some(class) = classes.iter().find(|c| c.len() >= 2).cloned() {
        let s = part
            .stable
            .iter()
            .copied()
            .find(|&s| {
                let hits = class.iter().filter(|&&x| g.is_adjacent(s, x)).count();
                hits > 0 && hits < class.len()
            })
            .expect("twin-free clique vertices differ on the stable side");
        chosen.push(s);
        classes = classes
            .into_iter()
            .flat_map(|c| {
                let (inside, outside): (Vec<_>, Vec<_>) = c.into_iter().partition(|&x| g.is_adjacent(s, x));
                [inside, outside].into_iter().filter(|part| !part.is_empty())
            })
            .collect();
        classes.sort_unstable_by_key(|c| c[0]);
    }
    chosen.sort_unstable();
    chosen
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitColoring {
    pub coloring: Coloring,
    pub separator: Vec<Vertex>,
    pub source: ColoringSource,
}

/// rlid-coloring of a connected twin-free split graph with at most `|K| + 2`
/// colors (`|K| = ω` for a maximal clique).
///
/// The separator `S' = {s_1 < … < s_m}` takes colors `1..m`; the rest of the
/// graph uses the three fresh colors `m+1, m+2, m+3` according to the traces
/// of the clique vertices on `S'`. The result is verified; on failure the
/// exact solver is asked for an `(ω + 2)`-coloring, and if that also fails a
/// [`Error::TheoremCounterexample`] is returned.
pub fn split_rlid_coloring(g: &Graph, part: &SplitPartition) -> Result<SplitColoring> {
    check_hypotheses(g, part)?;
    let separator = separator_unchecked(g, part);
    let palette = (part.clique.len() + 2) as Color;
    if let Some(coloring) = construct(g, part, &separator) {
        let coloring = coloring.with_palette(palette)?;
        if is_rlid(g, &coloring) {
            return Ok(SplitColoring {
                coloring,
                separator,
                source: ColoringSource::Construction,
            });
        }
    }
    match decide_k_rlid(g, palette, &SolveOptions::with_budget(Budget::default()))? {
        Some(coloring) => Ok(SplitColoring {
            coloring,
            separator,
            source: ColoringSource::Fallback,
        }),
        None => Err(Error::TheoremCounterexample(format!(
            "connected twin-free split graph with edges {:?} has no rlid {palette}-coloring",
            g.edges()
        ))),
    }
}

/// The case analysis; `None` when no case applies.
fn construct(g: &Graph, part: &SplitPartition, separator: &[Vertex]) -> Option<Coloring> {
    let m = separator.len() as Color;
    let (f1, f2, f3) = (m + 1, m + 2, m + 3);
    let mut colors = vec![f1; g.order()];
    let in_separator = |v: Vertex| separator.binary_search(&v).is_ok();
    for (i, &s) in separator.iter().enumerate() {
        colors[s] = i as Color + 1;
    }
    let trace = |x: Vertex| separator.iter().filter(|&&s| g.is_adjacent(s, x)).count();
    let untraced = part.clique.iter().copied().find(|&x| trace(x) == 0);
    let k1: Vec<Vertex> = part.clique.iter().copied().filter(|&x| trace(x) == 1).collect();
    let outside_clique_of = |s: Vertex| part.clique.iter().copied().find(|&y| !g.is_adjacent(s, y));

    let Some(u) = untraced else {
        if let Some(&x1) = k1.first() {
            let s1 = *separator.iter().find(|&&s| g.is_adjacent(s, x1))?;
            let y = outside_clique_of(s1)?;
            colors[x1] = f2;
            colors[y] = f3;
        }
        return Coloring::from_colors(colors).ok();
    };

    let a: Vec<Vertex> = g.neighbors(u).iter().copied().filter(|&s| part.stable.contains(&s)).collect();
    debug_assert!(a.iter().all(|&s| !in_separator(s)));
    match a.as_slice() {
        [] => colors[u] = f2,
        &[v] => {
            let y = outside_clique_of(v)?;
            colors[y] = f2;
            colors[u] = f3;
        }
        _ => {
            let shielded = part
                .clique
                .iter()
                .copied()
                .find(|&y| y != u && !a.iter().any(|&s| g.is_adjacent(s, y)));
            if let Some(&lone) = a.iter().find(|&&s| g.degree(s) == 1) {
                colors[u] = f3;
                colors[lone] = f2;
            } else if let Some(y) = shielded {
                // Only u carries f2, so it marks every clique neighborhood;
                // y's f3 separates u from its stable neighbors.
                colors[u] = f2;
                colors[y] = f3;
            } else {
                colors[a[0]] = f2;
                for &s in &a[1..] {
                    colors[s] = f3;
                }
            }
        }
    }
    Coloring::from_colors(colors).ok()
}
