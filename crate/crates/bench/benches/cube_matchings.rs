use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use morse_core::simplex_enum::{
    count_perfect_acyclic_matchings_cube, count_perfect_matchings_cube,
};

fn cube_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("cube");
    for d in [3u32, 4] {
        group.bench_with_input(BenchmarkId::new("perfect", d), &d, |b, &d| {
            b.iter(|| count_perfect_matchings_cube(d, 5).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("perfect_acyclic", d), &d, |b, &d| {
            b.iter(|| count_perfect_acyclic_matchings_cube(d, 5).unwrap())
        });
    }
    group.sample_size(10);
    group.bench_function("perfect_acyclic/5", |b| {
        b.iter(|| count_perfect_acyclic_matchings_cube(5, 5).unwrap())
    });
    group.finish();
}

criterion_group!(benches, cube_counts);
criterion_main!(benches);
