use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use rlid_core::constructions::{g_star, h_p, prop1_graph};
use rlid_core::generate::{plant_twins, random_connected_graph};
use rlid_core::{chi_exact, decide_k_rlid, max_clique_size, verify_rlid, Budget, Graph, Parameter, SolveOptions};

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("chi_rlid");
    let h2 = h_p(2).unwrap().graph;
    group.bench_function("h_2", |b| {
        b.iter(|| chi_exact(black_box(&h2), Parameter::Rlid, &SolveOptions::default()).unwrap())
    });
    for n in [8, 10, 12] {
        let g = plant_twins(&random_connected_graph(n as u64, n, 0.35), 7, 2);
        group.bench_with_input(BenchmarkId::new("random_with_twins", n), &g, |b, g| {
            b.iter(|| chi_exact(black_box(g), Parameter::Rlid, &SolveOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn gadget(c: &mut Criterion) {
    let mut group = c.benchmark_group("gadget_decide_3");
    let wheel = Graph::complete(1).join(&Graph::cycle(7));
    for (name, base) in [("c5", Graph::cycle(5)), ("k4", Graph::complete(4)), ("wheel8", wheel)] {
        let gs = g_star(&base).unwrap();
        group.bench_function(name, |b| {
            b.iter(|| decide_k_rlid(black_box(gs.graph()), 3, &SolveOptions::default()).unwrap())
        });
    }
    group.finish();
}

fn clique(c: &mut Criterion) {
    let h4 = h_p(4).unwrap().graph;
    c.bench_function("max_clique_h_4", |b| b.iter(|| max_clique_size(black_box(&h4), &Budget::default()).unwrap()));
}

fn verify(c: &mut Criterion) {
    let inst = prop1_graph(4).unwrap();
    let coloring = inst.canonical_coloring.clone().unwrap();
    c.bench_function("verify_prop1_4", |b| b.iter(|| verify_rlid(black_box(&inst.graph), black_box(&coloring))));
}

criterion_group!(benches, exact, gadget, clique, verify);
criterion_main!(benches);
