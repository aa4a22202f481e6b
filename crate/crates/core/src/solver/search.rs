//! Backtracking k-coloring search shared by every coloring parameter.
//!
//! A problem is a list of vertex pairs whose closed neighborhoods must carry
//! distinct color sets, plus an optional properness requirement. Vertices are
//! colored in a fixed order. A pair is rejected as soon as it can no longer
//! be separated: when the colored parts of both neighborhoods already show
//! the whole palette, or when they show equal sets and every uncolored vertex
//! lies in both neighborhoods. Color symmetry is broken by never opening more
//! than one new color at a time.

use crate::budget::Meter;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest palette the word-mask search handles.
pub const MAX_SEARCH_PALETTE: u32 = 64;

/// Order in which the search assigns colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VertexOrder {
    /// Greedy: next is the vertex that completes the most pending pairs,
    /// then the one with the most already-placed neighbors.
    #[default]
    PairCompletion,
    /// Reverse of the min-degree elimination order: dense core first.
    ReverseDegeneracy,
    /// Vertex index order.
    Natural,
}

impl VertexOrder {
    pub(crate) fn arrange(self, g: &Graph, pairs: &[(Vertex, Vertex)]) -> Vec<Vertex> {
        match self {
            VertexOrder::PairCompletion => pair_completion_order(g, pairs),
            VertexOrder::ReverseDegeneracy => {
                let (_, mut order) = g.degeneracy();
                order.reverse();
                order
            }
            VertexOrder::Natural => g.vertices().collect(),
        }
    }
}

fn pair_completion_order(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Vec<Vertex> {
    let n = g.order();
    let mut remaining: Vec<usize> = Vec::with_capacity(pairs.len());
    let mut open_sym: Vec<usize> = Vec::with_capacity(pairs.len());
    let mut pairs_of: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for (p, &(u, v)) in pairs.iter().enumerate() {
        let (nu, nv) = (g.closed_neighborhood(u), g.closed_neighborhood(v));
        remaining.push(nu.union(nv).count());
        open_sym.push(nu.symmetric_difference(nv).count());
        for w in nu.union(nv) {
            pairs_of[w].push((p, nu.contains(w) != nv.contains(w)));
        }
    }
    let mut placed = vec![false; n];
    let mut back = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let mut closes = 0;
                for &(p, sym) in &pairs_of[v] {
                    closes += (remaining[p] == 1 || (sym && open_sym[p] == 1)) as usize;
                }
                (closes, back[v], g.degree(v), std::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &(p, sym) in &pairs_of[v] {
            remaining[p] -= 1;
            open_sym[p] -= sym as usize;
        }
        for &w in g.neighbors(v) {
            back[w] += 1;
        }
    }
    order
}

pub(crate) struct Problem<'a> {
    pub graph: &'a Graph,
    pub pairs: Vec<(Vertex, Vertex)>,
    pub proper: bool,
}

impl Problem<'_> {
    /// A coloring with at most `k` colors meeting every requirement, if one
    /// exists.
    pub fn solve(&self, k: u32, order: VertexOrder, meter: &mut Meter) -> Result<Option<Coloring>> {
        let g = self.graph;
        let n = g.order();
        if n == 0 {
            return Ok(Some(Coloring::uniform(0, 1)));
        }
        if k == 0 {
            return Ok(None);
        }
        if k > MAX_SEARCH_PALETTE {
            return Err(Error::InvalidParameter(format!(
                "search palette {k} exceeds {MAX_SEARCH_PALETTE}"
            )));
        }
        let order = order.arrange(g, &self.pairs);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let closed: Vec<Vec<Vertex>> = g.vertices().map(|v| g.closed_neighbors(v)).collect();
        let mut watch: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for (p, &(u, v)) in self.pairs.iter().enumerate() {
            let nu = g.closed_neighborhood(u);
            let nv = g.closed_neighborhood(v);
            let settled = nu
                .symmetric_difference(nv)
                .map(|w| pos[w])
                .max()
                .unwrap_or(0);
            for w in nu.union(nv) {
                watch[pos[w]].push(p);
            }
            pairs.push(Watched { u, v, settled });
        }
        let earlier: Vec<Vec<Vertex>> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if self.proper {
                    g.neighbors(v).iter().copied().filter(|&w| pos[w] < i).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        let mut state = State {
            order: &order,
            closed: &closed,
            pairs: &pairs,
            watch: &watch,
            full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
            earlier: &earlier,
            k,
            colors: vec![0; n],
            meter,
        };
        if state.descend(0, 0)? {
            let colors = state.colors.iter().map(|&c| c as u32).collect();
            Ok(Some(Coloring::new(colors, k)?))
        } else {
            Ok(None)
        }
    }
}

struct Watched {
    u: Vertex,
    v: Vertex,
    /// Position after which only common neighbors remain uncolored.
    settled: usize,
}

struct State<'a, 'm> {
    order: &'a [Vertex],
    closed: &'a [Vec<Vertex>],
    pairs: &'a [Watched],
    /// Pairs whose neighborhoods contain the vertex at each position.
    watch: &'a [Vec<usize>],
    full: u64,
    earlier: &'a [Vec<Vertex>],
    k: u32,
    colors: Vec<u8>,
    meter: &'m mut Meter,
}

impl State<'_, '_> {
    /// Colors on the already-colored part of `N[v]`.
    #[inline]
    fn mask(&self, v: Vertex) -> u64 {
        self.closed[v]
            .iter()
            .fold(0u64, |m, &w| match self.colors[w] {
                0 => m,
                c => m | 1u64 << (c - 1),
            })
    }

    fn doomed(&self, i: usize) -> bool {
        self.watch[i].iter().any(|&p| {
            let pair = &self.pairs[p];
            let a = self.mask(pair.u);
            a == self.mask(pair.v) && (i >= pair.settled || a == self.full)
        })
    }

    fn descend(&mut self, i: usize, used: u32) -> Result<bool> {
        if i == self.order.len() {
            return Ok(true);
        }
        let v = self.order[i];
        let limit = self.k.min(used + 1);
        for color in 1..=limit as u8 {
            self.meter.tick()?;
            if self.earlier[i].iter().any(|&w| self.colors[w] == color) {
                continue;
            }
            self.colors[v] = color;
            if !self.doomed(i) && self.descend(i + 1, used.max(color as u32))? {
                return Ok(true);
            }
        }
        self.colors[v] = 0;
        Ok(false)
    }
}
