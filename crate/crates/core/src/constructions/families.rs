use super::gadget::subdivide_with_pendants;
use super::FamilyInstance;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest `p` accepted by the exponential families.
pub const MAX_FAMILY_P: usize = 12;

fn check_p(p: usize, min: usize) -> Result<()> {
    if p < min {
        return Err(Error::OrderTooSmall { order: p, min });
    }
    if p > MAX_FAMILY_P {
        return Err(Error::OrderTooLarge {
            order: p,
            max: MAX_FAMILY_P,
        });
    }
    Ok(())
}

/// `{1,3}`-style rendering of a subset given as a bitmask over `1..`.
fn subset_name(mask: usize) -> String {
    let members: Vec<String> = (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

fn clique_edges(vertices: impl Iterator<Item = Vertex> + Clone) -> Vec<(Vertex, Vertex)> {
    let vs: Vec<Vertex> = vertices.collect();
    let mut edges = Vec::new();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            edges.push((u, v));
        }
    }
    edges
}

/// The star `K_{1,p}` colored center 1, first leaf 2, other leaves 3.
pub fn star(p: usize) -> Result<FamilyInstance> {
    if p < 2 {
        return Err(Error::OrderTooSmall { order: p, min: 2 });
    }
    let g = Graph::complete_bipartite(1, p);
    let labels = std::iter::once("center".to_string())
        .chain((1..=p).map(|i| format!("leaf_{i}")))
        .collect();
    let mut colors = vec![3; p + 1];
    colors[0] = 1;
    colors[1] = 2;
    FamilyInstance::new(
        format!("star({p})"),
        g.with_labels(labels)?,
        Some(Coloring::new(colors, 3)?),
        Some(3),
    )
}

/// `P^{k-1}_{2k}`: `2k` vertices on a line, adjacent when at distance at most
/// `k - 1`.
pub fn power_path(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::OrderTooSmall { order: k, min: 2 });
    }
    let n = 2 * k;
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n.min(i + k)).map(move |j| (i, j)))
        .collect();
    Graph::new(n, &edges)
}

/// `H_p`: a clique on `x_Q` for every `Q ⊆ {1..p}` (vertex index = bitmask of
/// `Q`), then `y_1..y_p`, `y'_1..y'_p`, `z_1..z_p`.
pub fn h_p(p: usize) -> Result<FamilyInstance> {
    check_p(p, 2)?;
    let k = 1usize << p;
    let y = |i: usize| k + i - 1;
    let y2 = |i: usize| k + p + i - 1;
    let z = |i: usize| k + 2 * p + i - 1;
    let n = k + 3 * p;
    let mut edges = clique_edges(0..k);
    for i in 1..=p {
        edges.push((1 << (i - 1), y(i)));
        edges.push((y(i), y2(i)));
        for q in 0..k {
            if q >> (i - 1) & 1 == 1 && q.count_ones() >= 2 {
                edges.push((q, z(i)));
            }
        }
    }
    let mut labels: Vec<String> = (0..k).map(|q| format!("x_{}", subset_name(q))).collect();
    labels.extend((1..=p).map(|i| format!("y_{i}")));
    labels.extend((1..=p).map(|i| format!("y'_{i}")));
    labels.extend((1..=p).map(|i| format!("z_{i}")));

    let pc = p as Color;
    let mut colors = vec![pc + 1; n];
    for i in 1..=p {
        let ic = i as Color;
        colors[y(i)] = ic;
        colors[z(i)] = ic;
        colors[y2(i)] = ic % pc + 1;
    }
    FamilyInstance::new(
        format!("H_{p}"),
        Graph::new(n, &edges)?.with_labels(labels)?,
        Some(Coloring::new(colors, pc + 1)?),
        Some(p + 1),
    )
}

/// `Q_1(p)`: a clique on `x_Q` for `Q ⊆ {1..p-1}` (index = bitmask), then
/// stable `s_1..s_{p-1}` with `x_Q s_i` an edge iff `i ∈ Q`.
pub fn q1(p: usize) -> Result<FamilyInstance> {
    check_p(p, 2)?;
    let k = 1usize << (p - 1);
    let s = |i: usize| k + i - 1;
    let n = k + p - 1;
    let mut edges = clique_edges(0..k);
    for i in 1..p {
        for q in 0..k {
            if q >> (i - 1) & 1 == 1 {
                edges.push((q, s(i)));
            }
        }
    }
    let mut labels: Vec<String> = (0..k).map(|q| format!("x_{}", subset_name(q))).collect();
    labels.extend((1..p).map(|i| format!("s_{i}")));
    let pc = p as Color;
    let mut colors = vec![pc; n];
    colors[0] = pc + 1;
    for i in 1..p {
        colors[s(i)] = i as Color;
    }
    FamilyInstance::new(
        format!("Q1({p})"),
        Graph::new(n, &edges)?.with_labels(labels)?,
        Some(Coloring::new(colors, pc + 1)?),
        Some(p + 1),
    )
}

/// `Q_2(p)`: a clique on `v_1..v_p`, then stable `s_1..s_{p-1}` with `s_i`
/// attached to `v_i` only.
pub fn q2(p: usize) -> Result<FamilyInstance> {
    check_p(p, 2)?;
    let n = 2 * p - 1;
    let mut edges = clique_edges(0..p);
    edges.extend((0..p - 1).map(|i| (i, p + i)));
    let mut labels: Vec<String> = (1..=p).map(|i| format!("v_{i}")).collect();
    labels.extend((1..p).map(|i| format!("s_{i}")));
    let pc = p as Color;
    let mut colors = vec![pc; n];
    colors[p - 1] = pc + 1;
    for i in 0..p - 1 {
        colors[p + i] = i as Color + 1;
    }
    FamilyInstance::new(
        format!("Q2({p})"),
        Graph::new(n, &edges)?.with_labels(labels)?,
        Some(Coloring::new(colors, pc + 1)?),
        Some(p + 1),
    )
}

/// Twin expansion of the gadget on `K_{p+t}` with `t = C(p-1, 2)`.
///
/// The gadget `G*(K_{p+t})` keeps its layout (originals `x_1..x_{p+t}`, then
/// subdivision pairs, then pendants); `y_1..y_t` are appended as twins of
/// `x_1..x_t`. The canonical coloring uses `p` colors.
pub fn prop1_graph(p: usize) -> Result<FamilyInstance> {
    if p < 4 {
        return Err(Error::OrderTooSmall { order: p, min: 4 });
    }
    if p > 8 {
        return Err(Error::OrderTooLarge { order: p, max: 8 });
    }
    let t = (p - 1) * (p - 2) / 2;
    let base_order = p + t;
    let gadget = subdivide_with_pendants(&Graph::complete(base_order));
    let star = &gadget.instance.graph;
    let n0 = star.order();
    let n = n0 + t;
    let x = |i: usize| i - 1;
    let y = |i: usize| n0 + i - 1;

    let mut edges = star.edges().to_vec();
    for i in 1..=t {
        for w in star.closed_neighborhood(x(i)).ones() {
            edges.push((w, y(i)));
        }
    }
    let mut labels = star.labels().expect("gadget is labeled").to_vec();
    labels.extend((1..=t).map(|i| format!("twin-of-{}", x(i))));

    let pc = p as Color;
    let mut colors = vec![0 as Color; n];
    for i in 1..=p {
        colors[x(t + i)] = i as Color;
    }
    let pairs: Vec<(Color, Color)> = (1..pc)
        .flat_map(|a| (a + 1..pc).map(move |b| (a, b)))
        .collect();
    for (i, &(a, b)) in (1..=t).zip(&pairs) {
        colors[x(i)] = a;
        colors[y(i)] = b;
    }
    let special = {
        let (u, v) = (x(t + 1), x(t + p));
        gadget.edge_index(u, v).expect("complete base graph")
    };
    for (j, _) in gadget.edges.iter().enumerate() {
        let (a, b) = gadget.subdivision(j);
        let color = if j == special { pc - 1 } else { pc };
        colors[a] = color;
        colors[b] = color;
    }
    for i in 1..=base_order {
        let z = gadget.pendant(x(i));
        colors[z] = if i > t {
            if colors[x(i)] == 1 {
                2
            } else {
                1
            }
        } else {
            (1..pc)
                .find(|&c| c != colors[x(i)] && c != colors[y(i)])
                .expect("p - 1 >= 3 colors leave a free one")
        };
    }
    FamilyInstance::new(
        format!("prop1({p})"),
        Graph::new(n, &edges)?.with_labels(labels)?,
        Some(Coloring::new(colors, pc)?),
        Some(p),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::max_clique_size;
    use crate::budget::Budget;
    use crate::coloring::neighborhood_color_set;

    #[test]
    fn star_colorings() {
        let s2 = star(2).unwrap();
        assert_eq!(s2.graph.order(), 3);
        assert_eq!(s2.canonical_coloring.unwrap().colors(), &[1, 2, 3]);
        let s3 = star(3).unwrap();
        assert_eq!(s3.canonical_coloring.unwrap().colors(), &[1, 2, 3, 3]);
        assert!(star(5).is_ok());
        assert!(star(1).is_err());
    }

    #[test]
    fn power_path_shapes() {
        assert_eq!(power_path(2).unwrap(), Graph::path(4));
        assert_eq!(power_path(3).unwrap().size(), 9);
        assert!(power_path(2).unwrap().is_twin_free());
    }

    #[test]
    fn h2_shape_and_sets() {
        let h = h_p(2).unwrap();
        assert_eq!(h.graph.order(), 10);
        assert_eq!(h.canonical_coloring.as_ref().unwrap().colors_used(), 3);
        assert_eq!(max_clique_size(&h.graph, &Budget::default()).unwrap(), 4);
        let set = neighborhood_color_set(&h.graph, h.canonical_coloring.as_ref().unwrap(), 0b11);
        assert_eq!(set.to_vec(), vec![1, 2, 3]);
        assert_eq!(h.roles()[0b11], "x_{1,2}");
        assert!(h.graph.is_twin_free());
        assert!(h.graph.is_connected());
    }

    #[test]
    fn q_families() {
        let a = q1(2).unwrap();
        assert!(a.graph.induced_subgraph(&[0, 1, 2]).edges() == Graph::new(3, &[(0, 1), (1, 2)]).unwrap().edges());
        assert_eq!(q1(3).unwrap().graph.order(), 6);
        let b = q2(3).unwrap();
        assert_eq!(b.graph.order(), 5);
        for p in 2..=6 {
            assert!(q2(p).unwrap().graph.is_twin_free());
            assert!(q1(p).unwrap().graph.is_twin_free());
        }
    }

    #[test]
    fn prop1_shape() {
        let inst = prop1_graph(4).unwrap();
        assert_eq!(inst.graph.order(), 59);
        assert_eq!(inst.graph.twin_partition().t, 3);
        assert_eq!(inst.canonical_coloring.as_ref().unwrap().colors_used(), 4);
        assert!(prop1_graph(3).is_err());
        assert!(prop1_graph(5).is_ok());
    }
}
