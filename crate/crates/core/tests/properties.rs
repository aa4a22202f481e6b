mod common;

use proptest::prelude::*;

use rlid_core::constructions::{g_star, subdivide_with_pendants};
use rlid_core::io::{parse_dimacs, parse_edgelist, write_dimacs, write_edgelist};
use rlid_core::{
    decide_k_rlid, is_isomorphic, is_rlid, verify_id, verify_identifying_code, verify_lid, verify_rlid, Budget,
    Coloring, Graph, SolveOptions,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_and_coloring(max_n: usize, max_k: u32) -> impl Strategy<Value = (Graph, Coloring)> {
    graph_strategy(max_n).prop_flat_map(move |g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(1..=max_k, n))
            .prop_map(move |(g, colors)| (g, Coloring::new(colors, max_k).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn twin_classes_are_fibers_of_closed_neighborhoods(g in graph_strategy(8)) {
        let closed = common::closed_sets(g.order(), g.edges());
        let tp = g.twin_partition();
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(tp.representative[u] == tp.representative[v], closed[u] == closed[v]);
            }
            prop_assert!(closed[u].contains(&u));
            prop_assert_eq!(tp.representative[u], *tp.classes.iter().find(|c| c.contains(&u)).unwrap().first().unwrap());
        }
        prop_assert_eq!(tp.t, tp.classes.iter().filter(|c| c.len() > 1).count());
    }

    #[test]
    fn quotient_is_twin_free_and_idempotent(g in graph_strategy(8)) {
        let (q, _) = g.quotient();
        prop_assert!(q.is_twin_free());
        let (qq, tp) = q.quotient();
        prop_assert_eq!(tp.t, 0);
        prop_assert!(is_isomorphic(&q, &qq, &Budget::default()).unwrap());
    }

    #[test]
    fn join_adds_a_universal_vertex(g in graph_strategy(6)) {
        let j = Graph::complete(1).join(&g);
        prop_assert_eq!(j.order(), g.order() + 1);
        prop_assert_eq!(j.degree(0), g.order());
    }

    #[test]
    fn gadget_is_two_degenerate_exactly_when_cyclic(g in graph_strategy(6)) {
        prop_assume!(g.size() > 0);
        let has_cycle = g.size() + g.components().len() > g.order();
        let d = subdivide_with_pendants(&g).graph().degeneracy().0;
        prop_assert_eq!(d, if has_cycle { 2 } else { 1 });
    }

    #[test]
    fn rlid_matches_oracle((g, c) in graph_and_coloring(7, 4)) {
        prop_assert_eq!(is_rlid(&g, &c), common::brute_is_rlid(g.order(), g.edges(), c.colors()));
        prop_assert_eq!(verify_rlid(&g, &c).valid, is_rlid(&g, &c));
    }

    #[test]
    fn stricter_modes_imply_rlid((g, c) in graph_and_coloring(6, 4)) {
        let rlid = verify_rlid(&g, &c).valid;
        if verify_lid(&g, &c).valid {
            prop_assert!(rlid);
        }
        if verify_id(&g, &c).valid {
            prop_assert!(rlid);
        }
    }

    #[test]
    fn rlid_survives_color_permutation(
        (g, c) in graph_and_coloring(7, 4),
        perm in Just(vec![1u32, 2, 3, 4]).prop_shuffle(),
    ) {
        let p = c.permuted(&perm).unwrap();
        prop_assert_eq!(is_rlid(&g, &c), is_rlid(&g, &p));
    }

    #[test]
    fn rainbow_separates_twin_free_graphs(g in graph_strategy(8)) {
        prop_assume!(g.is_twin_free());
        prop_assert!(is_rlid(&g, &Coloring::rainbow(g.order())));
    }

    #[test]
    fn one_color_iff_clique_union(g in graph_strategy(8)) {
        prop_assert_eq!(is_rlid(&g, &Coloring::uniform(g.order(), 1)), g.is_clique_union());
    }

    #[test]
    fn whole_vertex_set_is_a_code_iff_twin_free(g in graph_strategy(8)) {
        let all: Vec<_> = g.vertices().collect();
        prop_assert_eq!(verify_identifying_code(&g, &all).valid, g.is_twin_free());
    }

    #[test]
    fn decision_witnesses_verify(g in graph_strategy(7), k in 1u32..5) {
        if let Some(c) = decide_k_rlid(&g, k, &SolveOptions::default()).unwrap() {
            prop_assert!(c.colors_used() <= k as usize);
            prop_assert!(verify_rlid(&g, &c).valid);
        }
    }

    #[test]
    fn shortcut_agrees_with_exhaustive_search(g in graph_strategy(6)) {
        let fast = rlid_core::chi_exact(&g, rlid_core::Parameter::Rlid, &SolveOptions::default()).unwrap();
        let slow = rlid_core::chi_exact(&g, rlid_core::Parameter::Rlid, &SolveOptions::exhaustive()).unwrap();
        prop_assert_eq!(fast.value, slow.value);
    }

    #[test]
    fn formats_round_trip(g in graph_strategy(9)) {
        prop_assert_eq!(&parse_dimacs(&write_dimacs(&g)).unwrap().graph, &g);
        prop_assert_eq!(&parse_edgelist(&write_edgelist(&g)).unwrap().graph, &g);
    }

    #[test]
    fn gadget_of_connected_graph_is_twin_free(g in graph_strategy(6)) {
        prop_assume!(g.order() >= 3 && g.is_connected());
        prop_assert!(g_star(&g).unwrap().graph().is_twin_free());
    }
}
