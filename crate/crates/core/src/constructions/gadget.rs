//! The subdivision gadget `G*`: every edge `uv` becomes a path `u-a-b-v` and
//! every original vertex gets a pendant.
//!
//! Numbering: originals `0..n`, then the subdivision pair of the `j`-th edge
//! (lexicographic) at `n + 2j` (next to `u`) and `n + 2j + 1` (next to `v`),
//! then the pendant of `v` at `n + 2m + v`.

use super::FamilyInstance;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::verify::verify_rlid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GStar {
    pub instance: FamilyInstance,
    pub base: Graph,
    /// Base edges in the order their subdivision pairs are numbered.
    pub edges: Vec<(Vertex, Vertex)>,
}

impl GStar {
    pub fn graph(&self) -> &Graph {
        &self.instance.graph
    }

    /// Subdivision pair of the `j`-th base edge, vertex near `u` first.
    pub fn subdivision(&self, j: usize) -> (Vertex, Vertex) {
        let n = self.base.order();
        (n + 2 * j, n + 2 * j + 1)
    }

    pub fn pendant(&self, v: Vertex) -> Vertex {
        self.base.order() + 2 * self.edges.len() + v
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }
}

/// Builds the gadget without checking the hypotheses on `g`.
pub fn subdivide_with_pendants(g: &Graph) -> GStar {
    let n = g.order();
    let base_edges = g.edges().to_vec();
    let m = base_edges.len();
    let mut edges = Vec::with_capacity(3 * m + n);
    let mut labels: Vec<String> = (0..n).map(|v| format!("orig-{v}")).collect();
    for (j, &(u, v)) in base_edges.iter().enumerate() {
        let (a, b) = (n + 2 * j, n + 2 * j + 1);
        edges.extend([(u, a), (a, b), (b, v)]);
        labels.push(format!("subdiv-of-{u}-{v}-near-{u}"));
        labels.push(format!("subdiv-of-{u}-{v}-near-{v}"));
    }
    for v in 0..n {
        edges.push((v, n + 2 * m + v));
        labels.push(format!("pendant-of-{v}"));
    }
    let graph = Graph::new(2 * n + 2 * m, &edges)
        .expect("gadget edges are valid")
        .with_labels(labels)
        .expect("one label per vertex");
    GStar {
        instance: FamilyInstance {
            name: "G*".into(),
            graph,
            canonical_coloring: None,
            expected_chi_rlid: None,
        },
        base: g.clone(),
        edges: base_edges,
    }
}

/// The gadget of a connected graph on at least 3 vertices. Twins in `g` are
/// allowed: the gadget of any connected graph with an edge is twin-free.
pub fn g_star(g: &Graph) -> Result<GStar> {
    if g.order() < 3 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            min: 3,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(subdivide_with_pendants(g))
}

/// Extends a proper `k`-coloring of `g` to an rlid `k`-coloring of its
/// gadget. Pendants copy the color of their vertex's minimum-index neighbor;
/// both vertices of a subdivision pair take the least color missing from the
/// edge's endpoints.
pub fn lift_coloring_gstar(g: &Graph, c: &Coloring, k: Color) -> Result<Coloring> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("lifting needs at least 3 colors, got {k}")));
    }
    c.check_total(g)?;
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| c.color(u) == c.color(v)) {
        return Err(Error::NotProper(u, v));
    }
    if let Some(v) = g.vertices().find(|&v| c.color(v) > k) {
        return Err(Error::InvalidColoring(format!(
            "vertex {v} has color {} above {k}",
            c.color(v)
        )));
    }
    let layout = subdivide_with_pendants(g);
    let mut colors = vec![0; layout.graph().order()];
    colors[..g.order()].copy_from_slice(c.colors());
    for (j, &(u, v)) in layout.edges.iter().enumerate() {
        let q = (1..=k)
            .find(|&q| q != c.color(u) && q != c.color(v))
            .expect("k >= 3");
        let (a, b) = layout.subdivision(j);
        colors[a] = q;
        colors[b] = q;
    }
    for v in g.vertices() {
        let source = g.neighbors(v).first().copied().unwrap_or(v);
        colors[layout.pendant(v)] = c.color(source);
    }
    Coloring::new(colors, k)
}

/// Restricts an rlid-coloring of the gadget to the original vertices, where
/// it is proper.
pub fn project_coloring_gstar(gstar: &GStar, c: &Coloring) -> Result<Coloring> {
    c.check_total(gstar.graph())?;
    let report = verify_rlid(gstar.graph(), c);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidColoring(format!(
            "not an rlid-coloring of the gadget: edge ({}, {}) unseparated",
            v.u, v.v
        )));
    }
    Coloring::new(c.colors()[..gstar.base.order()].to_vec(), c.palette())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{is_rlid, verify_proper};

    #[test]
    fn sizes() {
        let k3 = g_star(&Graph::complete(3)).unwrap();
        assert_eq!(k3.graph().order(), 12);
        assert_eq!(k3.graph().size(), 12);
        assert_eq!(g_star(&Graph::path(3)).unwrap().graph().order(), 10);
        assert_eq!(g_star(&Graph::complete(5)).unwrap().graph().degeneracy().0, 2);
        assert_eq!(k3.instance.roles()[3], "subdiv-of-0-1-near-0");
        assert_eq!(k3.instance.roles()[9], "pendant-of-0");
    }

    #[test]
    fn hypotheses() {
        assert_eq!(g_star(&Graph::path(2)).unwrap_err(), Error::OrderTooSmall { order: 2, min: 3 });
        assert!(g_star(&Graph::complete(4)).unwrap().graph().is_twin_free());
        assert_eq!(
            g_star(&Graph::path(3).disjoint_union(&Graph::path(3))).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn lift_and_project() {
        let cases = [
            (Graph::complete(3), vec![1, 2, 3]),
            (Graph::path(3), vec![1, 2, 1]),
            (Graph::cycle(5), vec![1, 2, 1, 2, 3]),
        ];
        for (g, colors) in cases {
            let c = Coloring::new(colors, 3).unwrap();
            let lifted = lift_coloring_gstar(&g, &c, 3).unwrap();
            let gs = subdivide_with_pendants(&g);
            assert!(is_rlid(gs.graph(), &lifted));
            let back = project_coloring_gstar(&gs, &lifted).unwrap();
            assert_eq!(back, c);
            assert!(verify_proper(&g, &back).valid);
        }
    }

    #[test]
    fn lift_rejects_bad_input() {
        let g = Graph::path(3);
        let c = Coloring::new(vec![1, 1, 2], 3).unwrap();
        assert_eq!(lift_coloring_gstar(&g, &c, 3), Err(Error::NotProper(0, 1)));
        let ok = Coloring::new(vec![1, 2, 1], 2).unwrap();
        assert!(lift_coloring_gstar(&g, &ok, 2).is_err());
        let gs = g_star(&g).unwrap();
        let bad = Coloring::uniform(gs.graph().order(), 1);
        assert!(project_coloring_gstar(&gs, &bad).is_err());
    }
}
