use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use morse_bench::{cycle, simplex};
use morse_core::hasse::HasseDiagram;
use morse_core::morse::{enumerate_matchings, MatchMode};
use morse_core::morse_complex::{discrete_morse_complex, pure_morse_complex, DEFAULT_FACE_BUDGET};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("morse_complex");
    group.bench_function("full/simplex3", |b| {
        let d3 = simplex(3);
        b.iter(|| discrete_morse_complex(&d3, DEFAULT_FACE_BUDGET, 1).unwrap())
    });
    group.bench_function("pure/simplex3", |b| {
        let d3 = simplex(3);
        b.iter(|| pure_morse_complex(&d3, DEFAULT_FACE_BUDGET, 1).unwrap())
    });
    for n in [6u32, 7, 8] {
        group.bench_with_input(BenchmarkId::new("full/cycle", n), &n, |b, &n| {
            let c = cycle(n);
            b.iter(|| discrete_morse_complex(&c, DEFAULT_FACE_BUDGET, 1).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("matchings");
    group.bench_function("all/simplex3", |b| {
        let h = HasseDiagram::new(&simplex(3));
        b.iter(|| enumerate_matchings(&h, MatchMode::All))
    });
    group.bench_function("perfect/simplex3", |b| {
        let h = HasseDiagram::new(&simplex(3));
        b.iter(|| enumerate_matchings(&h, MatchMode::Perfect))
    });
    group.finish();
}

criterion_group!(benches, construction, enumeration);
criterion_main!(benches);
