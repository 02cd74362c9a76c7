use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hurwitz_core::hurwitz::{infiniteness_certificate, orbit};
use hurwitz_core::orbit_graph::{classify_pattern, OrbitGraph};
use hurwitz_core::{BraidSystem, Subgroup};

fn orbits(c: &mut Criterion) {
    let big = BraidSystem::parse(3, &["s1", "D^2 s1", "D^4 s1", "D^6 s2"]).unwrap();
    let mut group = c.benchmark_group("orbit");
    group.sample_size(10);
    group.bench_function("full/648", |b| {
        b.iter(|| orbit(black_box(&big), Subgroup::Full, 100_000).unwrap().size())
    });
    let pure = BraidSystem::parse(3, &["s1", "s1", "s1", "s2"]).unwrap();
    group.bench_function("pure/27", |b| {
        b.iter(|| orbit(black_box(&pure), Subgroup::Pure, 100_000).unwrap().size())
    });
    group.finish();
}

fn certificates(c: &mut Criterion) {
    let s = BraidSystem::parse(3, &["s1", "s1", "s1", "s1", "s2"]).unwrap();
    c.bench_function("certificate/length5", |b| b.iter(|| infiniteness_certificate(black_box(&s))));
}

fn graphs(c: &mut Criterion) {
    let s = BraidSystem::parse(3, &["s1", "s1 s1", "s2"]).unwrap();
    c.bench_function("orbit_graph/build_and_classify", |b| {
        b.iter(|| classify_pattern(&OrbitGraph::build(black_box(&s), 1000).unwrap()))
    });
}

criterion_group!(benches, orbits, certificates, graphs);
criterion_main!(benches);
