//! Reference implementations that share no code with the library's search.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Closed neighborhoods from a raw edge list.
pub fn closed_sets(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let mut sets: Vec<BTreeSet<usize>> = (0..n).map(|v| BTreeSet::from([v])).collect();
    for &(u, v) in edges {
        sets[u].insert(v);
        sets[v].insert(u);
    }
    sets
}

/// Whether `colors` separates every edge whose ends have different closed
/// neighborhoods.
pub fn brute_is_rlid(n: usize, edges: &[(usize, usize)], colors: &[u32]) -> bool {
    let closed = closed_sets(n, edges);
    let seen = |v: usize| -> BTreeSet<u32> { closed[v].iter().map(|&w| colors[w]).collect() };
    edges
        .iter()
        .all(|&(u, v)| closed[u] == closed[v] || seen(u) != seen(v))
}

/// Least `k` for which one of the `k^n` colorings is rlid.
pub fn brute_chi_rlid(n: usize, edges: &[(usize, usize)]) -> usize {
    if n == 0 {
        return 0;
    }
    for k in 1..=n as u32 {
        let mut colors = vec![1u32; n];
        loop {
            if brute_is_rlid(n, edges, &colors) {
                return k as usize;
            }
            let mut i = 0;
            while i < n && colors[i] == k {
                colors[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("n distinct colors always work")
}

/// Whether some proper coloring with `k` colors exists, by exhaustion.
pub fn brute_is_k_colorable(n: usize, edges: &[(usize, usize)], k: u32) -> bool {
    let mut colors = vec![1u32; n];
    loop {
        if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
            return true;
        }
        let mut i = 0;
        while i < n && colors[i] == k {
            colors[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
        colors[i] += 1;
    }
}
