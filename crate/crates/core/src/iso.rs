//! Graph isomorphism for small graphs: color refinement followed by
//! backtracking over refinement-compatible vertex maps.

use std::collections::BTreeMap;

use crate::budget::{Budget, Meter};
use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// Exact isomorphism test. Intended for factors of a dozen or so vertices,
/// though refinement keeps structured larger inputs cheap.
pub fn is_isomorphic(g1: &Graph, g2: &Graph, budget: &Budget) -> Result<bool> {
    Ok(find_isomorphism(g1, g2, budget)?.is_some())
}

/// A vertex map `g1 -> g2` preserving adjacency both ways, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph, budget: &Budget) -> Result<Option<Vec<Vertex>>> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(None);
    }
    let n = g1.order();
    let (c1, c2) = joint_refinement(g1, g2);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return Ok(None);
    }

    // Rarest classes first, then prefer vertices adjacent to already placed ones.
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &c1 {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let linked = order.iter().filter(|&&w| g1.is_adjacent(v, w)).count();
                (class_size[&c1[v]], usize::MAX - linked, v)
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }

    let mut search = IsoSearch {
        g1,
        g2,
        c1: &c1,
        c2: &c2,
        order: &order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        meter: budget.meter(),
    };
    if search.extend(0)? {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

/// Color refinement run on both graphs with a shared palette so colors are
/// comparable across them.
fn joint_refinement(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut c1: Vec<usize> = g1.vertices().map(|v| g1.degree(v)).collect();
    let mut c2: Vec<usize> = g2.vertices().map(|v| g2.degree(v)).collect();
    let mut classes = count_distinct(&c1, &c2);
    loop {
        let mut palette: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let sig = |g: &Graph, c: &[usize], v: Vertex| {
            let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            ns.sort_unstable();
            (c[v], ns)
        };
        let s1: Vec<_> = g1.vertices().map(|v| sig(g1, &c1, v)).collect();
        let s2: Vec<_> = g2.vertices().map(|v| sig(g2, &c2, v)).collect();
        for s in s1.iter().chain(s2.iter()) {
            let next = palette.len();
            palette.entry(s.clone()).or_insert(next);
        }
        // Ids follow the sorted signature order so they do not depend on
        // vertex numbering.
        for (i, id) in palette.values_mut().enumerate() {
            *id = i;
        }
        let n1: Vec<usize> = s1.iter().map(|s| palette[s]).collect();
        let n2: Vec<usize> = s2.iter().map(|s| palette[s]).collect();
        let next_classes = count_distinct(&n1, &n2);
        c1 = n1;
        c2 = n2;
        if next_classes == classes {
            return (c1, c2);
        }
        classes = next_classes;
    }
}

fn count_distinct(a: &[usize], b: &[usize]) -> usize {
    let mut all: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

struct IsoSearch<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: &'a [usize],
    c2: &'a [usize],
    order: &'a [Vertex],
    map: Vec<Vertex>,
    used: Vec<bool>,
    meter: Meter,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        for w in 0..self.g2.order() {
            if self.used[w] || self.c2[w] != self.c1[v] {
                continue;
            }
            self.meter.tick()?;
            let consistent = self.order[..depth].iter().all(|&u| {
                self.g1.is_adjacent(u, v) == self.g2.is_adjacent(self.map[u], w)
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[w] = false;
            self.map[v] = usize::MAX;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_answers() {
        let b = Budget::default();
        assert!(!is_isomorphic(&Graph::cycle(4), &Graph::path(4), &b).unwrap());
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(is_isomorphic(&g, &g, &b).unwrap());
    }

    #[test]
    fn relabeled_graph_maps_back() {
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap();
        let perm = [3, 6, 0, 5, 1, 4, 2];
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::new(7, &edges).unwrap();
        let map = find_isomorphism(&g, &h, &Budget::default()).unwrap().unwrap();
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(g.is_adjacent(u, v), h.is_adjacent(map[u], map[v]));
            }
        }
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        // C6 versus two triangles: same degrees, refinement alone cannot split them.
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!is_isomorphic(&Graph::cycle(6), &two_triangles, &Budget::default()).unwrap());
    }
}
