use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hurwitz_core::dual::dual_nf;
use hurwitz_core::garside::{normal_form, super_summit_set};
use hurwitz_core::nielsen_thurston::classify;
use hurwitz_core::verify::random_word;
use hurwitz_core::BraidWord;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn words(degree: usize, len: usize, count: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    (0..count).map(|_| random_word(&mut rng, degree, len)).collect()
}

fn garside(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for degree in [3, 6] {
        for len in [10, 40] {
            let ws = words(degree, len, 32);
            group.bench_with_input(BenchmarkId::new(format!("B{degree}"), len), &ws, |b, ws| {
                b.iter(|| ws.iter().map(|w| normal_form(black_box(w))).collect::<Vec<_>>())
            });
        }
    }
    group.finish();
}

fn dual(c: &mut Criterion) {
    let ws = words(3, 40, 32);
    c.bench_function("dual_nf/B3/40", |b| {
        b.iter(|| ws.iter().map(|w| dual_nf(black_box(w)).unwrap()).collect::<Vec<_>>())
    });
}

fn summit(c: &mut Criterion) {
    let ws = words(4, 12, 8);
    c.bench_function("super_summit_set/B4/12", |b| {
        b.iter(|| ws.iter().map(|w| super_summit_set(black_box(w), 50_000).unwrap().len()).sum::<usize>())
    });
    c.bench_function("classify/B4/12", |b| {
        b.iter(|| ws.iter().map(|w| classify(black_box(w)).unwrap()).collect::<Vec<_>>())
    });
}

criterion_group!(benches, garside, dual, summit);
criterion_main!(benches);
