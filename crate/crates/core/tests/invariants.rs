//! Exhaustive checks over small connected graphs.

mod common;

use rayon::prelude::*;

use rlid_core::{
    bounds_report, chi_exact, enumerate_nonisomorphic, BoundsOptions, Graph, Parameter, SolveOptions,
};

fn rlid(g: &Graph) -> usize {
    chi_exact(g, Parameter::Rlid, &SolveOptions::default()).unwrap().value
}

fn connected_up_to(n: usize, twin_free: bool) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| enumerate_nonisomorphic(k, |g| g.is_connected() && (!twin_free || g.is_twin_free())).unwrap())
        .collect()
}

#[test]
fn rlid_is_at_most_lid_and_id_on_twin_free_graphs() {
    connected_up_to(6, true).par_iter().for_each(|g| {
        let r = rlid(g);
        let opts = SolveOptions::default();
        let lid = chi_exact(g, Parameter::Lid, &opts).unwrap().value;
        let id = chi_exact(g, Parameter::Id, &opts).unwrap().value;
        assert!(r <= lid && r <= id, "{:?}: rlid {r}, lid {lid}, id {id}", g.edges());
    });
}

#[test]
fn bounds_report_brackets_the_exact_value() {
    connected_up_to(6, false).par_iter().for_each(|g| {
        let r = rlid(g);
        let rep = bounds_report(g, &BoundsOptions::default());
        assert!(rep.best_lower <= r && r <= rep.best_upper, "{:?}: {r} vs {rep:?}", g.edges());
        if let Some(e) = rep.exact {
            assert_eq!(e, r, "{:?}", g.edges());
        }
    });
}

#[test]
fn chromatic_number_matches_oracle() {
    for g in connected_up_to(6, false) {
        let chi = chi_exact(&g, Parameter::Chromatic, &SolveOptions::default()).unwrap().value as u32;
        assert!(common::brute_is_k_colorable(g.order(), g.edges(), chi));
        assert!(chi == 1 || !common::brute_is_k_colorable(g.order(), g.edges(), chi - 1));
    }
}

#[test]
fn full_palette_examples() {
    let budget = rlid_core::Budget::default();
    let fan = Graph::complete(1).join(&Graph::path(4));
    for (g, full) in [(Graph::path(3), true), (fan, true), (Graph::cycle(5), false)] {
        assert_eq!(rlid_core::characterize_full_palette(&g, &budget).unwrap(), full);
        assert_eq!(rlid(&g) == g.order(), full, "{:?}", g.edges());
    }
}

#[test]
fn disconnected_value_is_component_maximum() {
    let g = Graph::path(4).disjoint_union(&Graph::complete(3));
    assert_eq!(rlid(&g), 3);
    let g = Graph::complete(2).disjoint_union(&Graph::complete(5));
    assert_eq!(rlid(&g), 1);
}

#[test]
fn gadget_of_four_chromatic_graphs_is_refuted_quickly() {
    // Grötzsch graph: Mycielskian of C_5.
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (5 + i, (i + 1) % 5), (5 + i, (i + 4) % 5), (5 + i, 10)]);
    }
    let grotzsch = Graph::new(11, &edges).unwrap();
    let wheel = Graph::complete(1).join(&Graph::cycle(7));
    let opts = SolveOptions::with_budget(rlid_core::Budget::nodes(1_000_000));
    for g in [grotzsch, wheel] {
        let gs = rlid_core::constructions::g_star(&g).unwrap();
        assert_eq!(rlid_core::decide_k_rlid(gs.graph(), 3, &opts).unwrap(), None);
        assert_eq!(rlid_core::decide_k_proper(&g, 3, &opts).unwrap(), None);
    }
}
