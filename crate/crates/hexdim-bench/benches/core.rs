use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use hexdim::audit::{audit_hc, default_hc_landmarks};
use hexdim::generators::HcParams;
use hexdim::graph::all_pairs_distances;
use hexdim::resolve::{is_resolving, min_dimension, SearchOptions, Variant};
use hexdim_bench::hc;

fn bench_all_pairs(c: &mut Criterion) {
    let g = hc(6, 6, 6);
    c.bench_function("all_pairs_distances hc(6,6,6)", |b| {
        b.iter(|| all_pairs_distances(black_box(&g)).unwrap())
    });
}

fn bench_resolving_check(c: &mut Criterion) {
    let g = hc(4, 4, 4);
    let dm = all_pairs_distances(&g).unwrap();
    let landmarks: Vec<usize> = default_hc_landmarks()
        .iter()
        .map(|&l| g.vertex_by_label(l).unwrap())
        .collect();
    c.bench_function("is_resolving mixed hc(4,4,4)", |b| {
        b.iter(|| is_resolving(&g, &dm, black_box(&landmarks), Variant::MixedMetric))
    });
}

fn bench_certified_mixed_search(c: &mut Criterion) {
    let g = hc(4, 4, 4);
    let opts = SearchOptions::default();
    c.bench_function("min_dimension mixed hc(4,4,4) certified", |b| {
        b.iter(|| min_dimension(black_box(&g), Variant::MixedMetric, &opts).unwrap())
    });
}

fn bench_formula_audit(c: &mut Criterion) {
    let params = HcParams { a: 4, b: 4, c: 4 };
    c.bench_function("audit_hc(4,4,4)", |b| {
        b.iter(|| audit_hc(black_box(params), None, 1).unwrap())
    });
}

criterion_group!(
    benches,
    bench_all_pairs,
    bench_resolving_check,
    bench_certified_mixed_search,
    bench_formula_audit
);
criterion_main!(benches);
