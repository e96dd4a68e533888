use criterion::{black_box, criterion_group, criterion_main, Criterion};
use vstab::families::{g9, h_n_e};
use vstab::generator::enumerate_graphs;
use vstab::{analyze, canonical_form, enumerate, is_planar, Filter, GenSpec, Graph};

fn canon(c: &mut Criterion) {
    let h = h_n_e(18, 7).unwrap();
    let q4 = Graph::hypercube(4).unwrap();
    c.bench_function("canonical_form/h18", |b| {
        b.iter(|| canonical_form(black_box(&h)))
    });
    c.bench_function("canonical_form/q4", |b| {
        b.iter(|| canonical_form(black_box(&q4)))
    });
}

fn chromatic(c: &mut Criterion) {
    let g = g9();
    let h = h_n_e(16, 3).unwrap();
    c.bench_function("analyze/g9", |b| b.iter(|| analyze(black_box(&g)).unwrap()));
    c.bench_function("analyze/h16", |b| {
        b.iter(|| analyze(black_box(&h)).unwrap())
    });
}

fn planarity(c: &mut Criterion) {
    let h = h_n_e(18, 7).unwrap();
    c.bench_function("is_planar/h18", |b| b.iter(|| is_planar(black_box(&h))));
}

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("all_order_7", |b| {
        b.iter(|| enumerate_graphs(7, None, 1).unwrap())
    });
    group.bench_function("target_class_order_9", |b| {
        let spec = GenSpec {
            n: 9,
            max_degree: Some(4),
            connected_only: false,
            filter: Some(Filter::TARGET_CLASS),
        };
        b.iter(|| enumerate(spec).unwrap())
    });
    group.finish();
}

criterion_group!(benches, canon, chromatic, planarity, generation);
criterion_main!(benches);
