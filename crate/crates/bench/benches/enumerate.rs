use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use r1d_bench::{count, CELLS};

fn cells(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for &(n, d, _) in CELLS {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{n}x{d}")),
            &(n, d),
            |b, &(n, d)| b.iter(|| count(black_box(n), black_box(d), 1)),
        );
    }
    group.finish();
}

criterion_group!(benches, cells);
criterion_main!(benches);
