//! Simple undirected graphs with precomputed open and closed neighborhoods.
//!
//! Vertices are dense indices `0..order`. Neighborhoods are stored as bit rows
//! so that the closed-neighborhood comparisons every other module leans on
//! (equality, symmetric difference, intersection with a code) cost a handful
//! of word operations.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    open: Vec<FixedBitSet>,
    closed: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse
    /// into one edge; self-loops and out-of-range endpoints are rejected.
    pub fn new(order: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut open: Vec<FixedBitSet> = (0..order).map(|_| FixedBitSet::with_capacity(order)).collect();
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::VertexOutOfRange { u, v, order });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            open[u].insert(v);
            open[v].insert(u);
        }
        Ok(Graph::from_rows(open))
    }

    fn from_rows(open: Vec<FixedBitSet>) -> Graph {
        let order = open.len();
        let adj: Vec<Vec<Vertex>> = open.iter().map(|row| row.ones().collect()).collect();
        let closed = open
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.clone();
                c.insert(v);
                c
            })
            .collect();
        let edges = adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect();
        Graph {
            order,
            edges,
            adj,
            open,
            closed,
            labels: None,
        }
    }

    /// Attaches one role label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.order {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn open_neighborhood(&self, v: Vertex) -> &FixedBitSet {
        &self.open[v]
    }

    /// `N[v]`: the neighbors of `v` together with `v` itself.
    pub fn closed_neighborhood(&self, v: Vertex) -> &FixedBitSet {
        &self.closed[v]
    }

    /// Members of `N[v]` in increasing order.
    pub fn closed_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.closed[v].ones().collect()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.open[u].contains(v)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order
    }

    /// True iff `N[u] = N[v]`.
    pub fn are_twins(&self, u: Vertex, v: Vertex) -> bool {
        self.closed[u] == self.closed[v]
    }

    /// First twin pair `(u, v)` with `u < v`, if any.
    pub fn find_twins(&self) -> Option<(Vertex, Vertex)> {
        let part = self.twin_partition();
        part.classes
            .iter()
            .find(|c| c.len() >= 2)
            .map(|c| (c[0], c[1]))
    }

    pub fn is_twin_free(&self) -> bool {
        self.find_twins().is_none()
    }

    /// Groups vertices by closed neighborhood.
    pub fn twin_partition(&self) -> TwinPartition {
        let mut index: HashMap<&FixedBitSet, usize> = HashMap::new();
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        let mut representative = Vec::with_capacity(self.order);
        for (v, closed) in self.closed.iter().enumerate() {
            let id = *index.entry(closed).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[id].push(v);
            representative.push(classes[id][0]);
        }
        let t = classes.iter().filter(|c| c.len() >= 2).count();
        TwinPartition {
            classes,
            t,
            representative,
        }
    }

    /// The twin quotient: the subgraph induced by one representative (the
    /// minimum index) of every twin class.
    pub fn quotient(&self) -> (Graph, TwinPartition) {
        let part = self.twin_partition();
        let reps: Vec<Vertex> = part.classes.iter().map(|c| c[0]).collect();
        (self.induced_subgraph(&reps), part)
    }

    /// Subgraph induced by `vertices`, renumbered in the given order. Labels
    /// are carried over.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut open: Vec<FixedBitSet> = (0..vertices.len())
            .map(|_| FixedBitSet::with_capacity(vertices.len()))
            .collect();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    open[i].insert(pos[w]);
                }
            }
        }
        let mut g = Graph::from_rows(open);
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// Connected components, each sorted, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// True iff every connected component is a complete graph.
    pub fn is_clique_union(&self) -> bool {
        self.vertices()
            .all(|v| self.adj[v].iter().all(|&w| self.closed[v] == self.closed[w]))
    }

    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..].iter().all(|&v| self.is_adjacent(u, v))
        })
    }

    pub fn is_stable(&self, vertices: &[Vertex]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..].iter().all(|&v| !self.is_adjacent(u, v))
        })
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<Vertex> {
        self.vertices()
            .filter(|&v| self.degree(v) + 1 == self.order)
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let open = (0..self.order)
            .map(|v| {
                let mut row = self.closed[v].clone();
                row.toggle_range(..);
                row
            })
            .collect();
        Graph::from_rows(open)
    }

    /// BFS two-coloring. `None` iff some component has an odd cycle.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut side = vec![u8::MAX; self.order];
        for s in 0..self.order {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        let left = self.vertices().filter(|&v| side[v] == 0).collect();
        let right = self.vertices().filter(|&v| side[v] == 1).collect();
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Degeneracy by repeated removal of a minimum-degree vertex (lowest index
    /// on ties). Returns the degeneracy and the elimination order.
    pub fn degeneracy(&self) -> (usize, Vec<Vertex>) {
        let mut deg: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.order];
        let mut order = Vec::with_capacity(self.order);
        let mut k = 0;
        for _ in 0..self.order {
            let v = (0..self.order)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("vertex remains");
            k = k.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        (k, order)
    }

    /// Disjoint union with `other`; `other`'s vertices are shifted by
    /// `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::new(self.order + other.order, &edges).expect("shifted edges are in range")
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        for u in 0..self.order {
            for v in 0..other.order {
                edges.push((u, v + shift));
            }
        }
        Graph::new(self.order + other.order, &edges).expect("join edges are in range")
    }

    /// Adjacency of a graph with at most 64 vertices as one word per vertex.
    pub(crate) fn adjacency_words(&self) -> Option<Vec<u64>> {
        if self.order > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect(),
        )
    }
}

/// Standard small graphs.
impl Graph {
    pub fn empty(order: usize) -> Graph {
        Graph::new(order, &[]).expect("no edges")
    }

    pub fn complete(order: usize) -> Graph {
        let edges: Vec<_> = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .collect();
        Graph::new(order, &edges).expect("valid")
    }

    pub fn path(order: usize) -> Graph {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Graph::new(order, &edges).expect("valid")
    }

    pub fn cycle(order: usize) -> Graph {
        let mut edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        if order >= 3 {
            edges.push((0, order - 1));
        }
        Graph::new(order, &edges).expect("valid")
    }

    /// `K_{a,b}` with the `a` side numbered first.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::new(a + b, &edges).expect("valid")
    }
}

/// Equivalence classes of the closed-neighborhood relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Classes ordered by minimum member; members sorted.
    pub classes: Vec<Vec<Vertex>>,
    /// Number of classes with at least two members.
    pub t: usize,
    /// Minimum-index member of each vertex's class.
    pub representative: Vec<Vertex>,
}

impl TwinPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(bits: &FixedBitSet) -> Vec<usize> {
        bits.ones().collect()
    }

    #[test]
    fn build_path_and_singleton() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(set(p4.closed_neighborhood(1)), vec![0, 1, 2]);
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(set(k1.closed_neighborhood(0)), vec![0]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { u: 0, v: 3, order: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn twins() {
        assert!(Graph::complete(4).are_twins(0, 1));
        assert!(!Graph::cycle(4).are_twins(0, 2));
        assert!(!Graph::path(4).are_twins(1, 2));
    }

    #[test]
    fn twin_partitions() {
        let k4 = Graph::complete(4).twin_partition();
        assert_eq!(k4.classes, vec![vec![0, 1, 2, 3]]);
        assert_eq!(k4.t, 1);

        let p4 = Graph::path(4).twin_partition();
        assert_eq!(p4.classes.len(), 4);
        assert_eq!(p4.t, 0);

        let mut edges: Vec<_> = Graph::complete(4).edges().to_vec();
        edges.push((0, 4));
        let g = Graph::new(5, &edges).unwrap().twin_partition();
        assert_eq!(g.classes, vec![vec![0], vec![1, 2, 3], vec![4]]);
        assert_eq!(g.t, 1);
        assert_eq!(g.representative, vec![0, 1, 1, 1, 4]);
    }

    #[test]
    fn quotient_of_clique_is_k1() {
        for n in 2..6 {
            let (q, part) = Graph::complete(n).quotient();
            assert_eq!(q.order(), 1);
            assert_eq!(part.t, 1);
        }
        let (q, part) = Graph::path(5).quotient();
        assert_eq!(q, Graph::path(5));
        assert_eq!(part.t, 0);
    }

    #[test]
    fn bipartitions() {
        assert_eq!(
            Graph::cycle(6).bipartition(),
            Some((vec![0, 2, 4], vec![1, 3, 5]))
        );
        assert_eq!(Graph::cycle(5).bipartition(), None);
        assert_eq!(
            Graph::complete_bipartite(1, 3).bipartition(),
            Some((vec![0], vec![1, 2, 3]))
        );
    }

    #[test]
    fn degeneracy_values() {
        let tree = Graph::new(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(tree.degeneracy().0, 1);
        assert_eq!(Graph::complete(5).degeneracy().0, 4);
        assert_eq!(Graph::cycle(7).degeneracy().0, 2);
    }

    #[test]
    fn joins() {
        let p3 = Graph::empty(1).join(&Graph::empty(2));
        assert_eq!(p3.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(Graph::empty(1).join(&Graph::empty(1)), Graph::complete(2));
        let fan = Graph::empty(1).join(&Graph::path(4));
        assert_eq!(fan.order(), 5);
        assert_eq!(fan.universal_vertices(), vec![0]);
    }

    #[test]
    fn complement_of_p4_is_p4_shaped() {
        let c = Graph::path(4).complement();
        assert_eq!(c.size(), 3);
        assert!(c.is_connected());
    }

    #[test]
    fn clique_unions() {
        assert!(Graph::complete(3).disjoint_union(&Graph::complete(2)).is_clique_union());
        assert!(!Graph::path(3).is_clique_union());
        assert!(Graph::empty(3).is_clique_union());
    }
}
