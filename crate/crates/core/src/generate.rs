//! Exhaustive enumeration of small labeled graphs and seeded random families.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::split::{find_split_partition, SplitPartition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order accepted by full labeled enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Structural filter for enumeration; every enabled flag must hold.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GraphClass {
    pub connected: bool,
    pub bipartite: bool,
    pub twin_free: bool,
    pub split: bool,
}

impl GraphClass {
    pub fn any() -> Self {
        GraphClass::default()
    }

    pub fn connected() -> Self {
        GraphClass {
            connected: true,
            ..Default::default()
        }
    }

    pub fn and_bipartite(mut self) -> Self {
        self.bipartite = true;
        self
    }

    pub fn and_twin_free(mut self) -> Self {
        self.twin_free = true;
        self
    }

    pub fn and_split(mut self) -> Self {
        self.split = true;
        self
    }

    pub fn admits(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.bipartite || g.is_bipartite())
            && (!self.twin_free || g.is_twin_free())
            && (!self.split || find_split_partition(g).is_ok())
    }
}

fn pairs(order: usize) -> Vec<(Vertex, Vertex)> {
    (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect()
}

/// All `2^(n choose 2)` labeled graphs on `order` vertices accepted by
/// `filter`, in increasing order of their edge bitmask.
pub fn enumerate_graphs<F>(order: usize, filter: F) -> Result<impl Iterator<Item = Graph>>
where
    F: Fn(&Graph) -> bool,
{
    if order > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let pairs = pairs(order);
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(order, &edges).expect("pairs are in range");
        filter(&g).then_some(g)
    }))
}

/// One representative per isomorphism class among the graphs
/// [`enumerate_graphs`] yields; the first labeled member met is kept.
pub fn enumerate_nonisomorphic<F>(order: usize, filter: F) -> Result<Vec<Graph>>
where
    F: Fn(&Graph) -> bool,
{
    let mut seen = HashSet::new();
    Ok(enumerate_graphs(order, filter)?
        .filter(|g| seen.insert(canonical_code(g)))
        .collect())
}

/// Isomorphism-invariant code of a graph with at most 7 vertices: the least
/// edge bitmask over all relabelings that list vertices by non-increasing
/// degree.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= MAX_ENUMERATION_ORDER + 1, "canonical code supports at most 8 vertices");
    let mut by_degree: Vec<Vertex> = g.vertices().collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut cells: Vec<Vec<Vertex>> = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(cell) if g.degree(cell[0]) == g.degree(v) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut labeling = Vec::with_capacity(n);
    permute_cells(g, &mut cells, 0, &mut labeling, &mut best);
    best
}

fn permute_cells(g: &Graph, cells: &mut [Vec<Vertex>], cell: usize, labeling: &mut Vec<Vertex>, best: &mut u64) {
    if cell == cells.len() {
        let n = labeling.len();
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.is_adjacent(labeling[i], labeling[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(code);
        return;
    }
    let len = cells[cell].len();
    permute_within(g, cells, cell, 0, len, labeling, best);
}

fn permute_within(
    g: &Graph,
    cells: &mut [Vec<Vertex>],
    cell: usize,
    i: usize,
    len: usize,
    labeling: &mut Vec<Vertex>,
    best: &mut u64,
) {
    if i == len {
        permute_cells(g, cells, cell + 1, labeling, best);
        return;
    }
    for j in i..len {
        cells[cell].swap(i, j);
        labeling.push(cells[cell][i]);
        permute_within(g, cells, cell, i + 1, len, labeling, best);
        labeling.pop();
        cells[cell].swap(i, j);
    }
}

/// Random connected graph: a random recursive tree on `order` vertices plus
/// every other pair independently with probability `edge_prob`.
pub fn random_connected_graph(seed: u64, order: usize, edge_prob: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..order {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..order {
        for v in u + 1..order {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(order, &edges).expect("generated edges are valid")
}

/// Adds `count` new vertices, each a twin of a uniformly chosen existing
/// vertex (adjacent to it and to all of its neighbors).
pub fn plant_twins(g: &Graph, seed: u64, count: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order = g.order();
    let mut edges = g.edges().to_vec();
    let mut current = g.clone();
    for _ in 0..count {
        let x = rng.gen_range(0..order);
        let y = order;
        for w in current.closed_neighborhood(x).ones() {
            edges.push((w, y));
        }
        order += 1;
        current = Graph::new(order, &edges).expect("twin edges are valid");
    }
    current
}

/// Seeded random split graph.
///
/// The clique block comes first, then the stable block. Every clique–stable
/// pair is wired with probability `edge_prob`; a stable vertex left without
/// neighbors is wired to one uniformly chosen clique vertex. With `twin_free`
/// set, samples containing twins are rejected and redrawn from the same
/// stream. The returned partition is normalized so its clique is
/// inclusion-maximal (see [`SplitPartition::maximalized`]).
pub fn random_split_graph(
    seed: u64,
    clique_size: usize,
    stable_size: usize,
    edge_prob: f64,
    twin_free: bool,
) -> Result<(Graph, SplitPartition)> {
    if clique_size == 0 || stable_size == 0 {
        return Err(Error::InvalidParameter("split sizes must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidParameter(format!("edge probability {edge_prob} outside [0, 1]")));
    }
    const ATTEMPTS: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = clique_size + stable_size;
    for _ in 0..ATTEMPTS {
        let mut edges: Vec<(Vertex, Vertex)> = pairs(clique_size);
        for s in clique_size..order {
            let before = edges.len();
            for k in 0..clique_size {
                if rng.gen_bool(edge_prob) {
                    edges.push((k, s));
                }
            }
            if edges.len() == before {
                edges.push((rng.gen_range(0..clique_size), s));
            }
        }
        let g = Graph::new(order, &edges).expect("generated edges are valid");
        if twin_free && !g.is_twin_free() {
            continue;
        }
        let part = SplitPartition {
            clique: (0..clique_size).collect(),
            stable: (clique_size..order).collect(),
            separator: None,
        }
        .maximalized(&g);
        return Ok((g, part));
    }
    Err(Error::InvalidParameter(format!(
        "no twin-free split graph with |K| = {clique_size}, |S| = {stable_size} found in {ATTEMPTS} draws"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_graphs(2, |_| true).unwrap().count(), 2);
        assert_eq!(
            enumerate_graphs(3, |g| GraphClass::connected().admits(g)).unwrap().count(),
            4
        );
        assert_eq!(enumerate_graphs(4, |_| true).unwrap().count(), 64);
        assert!(matches!(
            enumerate_graphs(8, |_| true),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn connected_labeled_counts() {
        // OEIS A001187: 1, 1, 4, 38, 728, 26704.
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                enumerate_graphs(n, |g| g.is_connected()).unwrap().count()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }

    #[test]
    fn unlabeled_counts() {
        // OEIS A000088: 1, 2, 4, 11, 34, 156.
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_nonisomorphic(n, |_| true).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn connected_bipartite_matches_parity_oracle() {
        // Independent odd-cycle test: a graph is bipartite iff some vertex
        // 2-coloring (brute force over all 2^n) leaves no edge monochromatic.
        let oracle = |g: &Graph| {
            (0u32..1 << g.order()).any(|side| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| (side >> u & 1) != (side >> v & 1))
            })
        };
        let ours = enumerate_graphs(5, |g| GraphClass::connected().and_bipartite().admits(g))
            .unwrap()
            .count();
        let reference = enumerate_graphs(5, |g| g.is_connected() && oracle(g))
            .unwrap()
            .count();
        assert_eq!(ours, reference);
        assert!(ours > 0);
    }

    #[test]
    fn random_split_is_deterministic() {
        let a = random_split_graph(1, 3, 2, 0.5, false).unwrap();
        let b = random_split_graph(1, 3, 2, 0.5, false).unwrap();
        assert_eq!(a, b);
        let (g, part) = random_split_graph(9, 1, 1, 0.0, false).unwrap();
        assert_eq!(g, Graph::path(2));
        assert_eq!(part.clique.len() + part.stable.len(), 2);
    }

    #[test]
    fn planted_twins_are_twins() {
        let g = random_connected_graph(3, 5, 0.3);
        let h = plant_twins(&g, 4, 2);
        assert_eq!(h.order(), 7);
        assert!(h.twin_partition().t >= 1);
        assert!(h.is_connected());
    }
}
