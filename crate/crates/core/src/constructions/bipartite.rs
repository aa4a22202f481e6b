//! Three-coloring of connected bipartite graphs by breadth-first levels.

use std::collections::VecDeque;

use serde::Serialize;

use super::ColoringSource;
use crate::budget::Budget;
use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solver::{decide_k_rlid, SolveOptions};
use crate::verify::is_rlid;

/// BFS levels of the root's component, each split into `A_i` (no neighbor on
/// the next level) and `B_i` (the rest).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelDecomposition {
    pub root: Vertex,
    pub levels: Vec<Vec<Vertex>>,
    pub a_sets: Vec<Vec<Vertex>>,
    pub b_sets: Vec<Vec<Vertex>>,
}

pub fn level_decomposition(g: &Graph, root: Vertex) -> LevelDecomposition {
    let mut depth = vec![usize::MAX; g.order()];
    depth[root] = 0;
    let mut levels: Vec<Vec<Vertex>> = vec![vec![root]];
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                if levels.len() <= depth[w] {
                    levels.push(Vec::new());
                }
                levels[depth[w]].push(w);
                queue.push_back(w);
            }
        }
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    let (a_sets, b_sets) = levels
        .iter()
        .enumerate()
        .map(|(i, level)| {
            level
                .iter()
                .partition(|&&v| !g.neighbors(v).iter().any(|&w| depth[w] == i + 1))
        })
        .unzip();
    LevelDecomposition {
        root,
        levels,
        a_sets,
        b_sets,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteColoring {
    pub coloring: Coloring,
    /// Absent when the graph is a star and the star coloring was used.
    pub levels: Option<LevelDecomposition>,
    pub source: ColoringSource,
}

/// rlid 3-coloring of a connected bipartite graph on at least 3 vertices.
///
/// A star gets center 1, its first leaf 2 and the remaining leaves 3.
/// Otherwise levels are taken from vertex 0 and colored by depth modulo 4:
/// `L_0 → 1`, `A_1 → 1`, `B_1 → 2`, `L_2 → 3`, `A_3 → 3`, `B_3 → 2`. The
/// result is verified; on failure the exact solver is asked for a 3-coloring,
/// and if that also fails a [`Error::TheoremCounterexample`] is returned.
pub fn bipartite_three_coloring(g: &Graph) -> Result<BipartiteColoring> {
    if g.order() < 3 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            min: 3,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let (coloring, levels) = if let Some(&center) = g.universal_vertices().first() {
        let mut colors = vec![3; g.order()];
        colors[center] = 1;
        let first_leaf = g.neighbors(center)[0];
        colors[first_leaf] = 2;
        (Coloring::new(colors, 3)?, None)
    } else {
        let levels = level_decomposition(g, 0);
        let mut colors = vec![0 as Color; g.order()];
        for (i, level) in levels.levels.iter().enumerate() {
            let (a, b) = match i % 4 {
                0 => (1, 1),
                1 => (1, 2),
                2 => (3, 3),
                _ => (3, 2),
            };
            for &v in &levels.a_sets[i] {
                colors[v] = a;
            }
            for &v in &levels.b_sets[i] {
                colors[v] = b;
            }
            debug_assert!(level.iter().all(|&v| colors[v] != 0));
        }
        (Coloring::new(colors, 3)?, Some(levels))
    };
    if is_rlid(g, &coloring) {
        return Ok(BipartiteColoring {
            coloring,
            levels,
            source: ColoringSource::Construction,
        });
    }
    match decide_k_rlid(g, 3, &SolveOptions::with_budget(Budget::default()))? {
        Some(coloring) => Ok(BipartiteColoring {
            coloring,
            levels,
            source: ColoringSource::Fallback,
        }),
        None => Err(Error::TheoremCounterexample(format!(
            "connected bipartite graph with edges {:?} has no rlid 3-coloring",
            g.edges()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_levels() {
        let g = Graph::cycle(6);
        let r = bipartite_three_coloring(&g).unwrap();
        assert_eq!(r.source, ColoringSource::Construction);
        assert_eq!(r.coloring.colors(), &[1, 2, 3, 3, 3, 2]);
        let levels = r.levels.unwrap();
        assert_eq!(levels.levels, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert_eq!(levels.a_sets[3], vec![3]);
        assert!(levels.b_sets.last().unwrap().is_empty());
    }

    #[test]
    fn path_from_end() {
        let r = bipartite_three_coloring(&Graph::path(5)).unwrap();
        assert_eq!(r.coloring.colors(), &[1, 2, 3, 2, 1]);
    }

    #[test]
    fn star_case() {
        let r = bipartite_three_coloring(&Graph::complete_bipartite(1, 3)).unwrap();
        assert_eq!(r.coloring.colors(), &[1, 2, 3, 3]);
        assert!(r.levels.is_none());
    }

    #[test]
    fn preconditions() {
        assert_eq!(bipartite_three_coloring(&Graph::cycle(5)), Err(Error::NotBipartite));
        assert!(matches!(
            bipartite_three_coloring(&Graph::path(2)),
            Err(Error::OrderTooSmall { .. })
        ));
        assert_eq!(
            bipartite_three_coloring(&Graph::path(3).disjoint_union(&Graph::path(2))),
            Err(Error::Disconnected)
        );
    }
}
