use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use real_schemes::classify::{classify_cubic_degree2, classify_m55, M55Options};
use real_schemes::parallel::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn m55_prefix(c: &mut Criterion) {
    let mut group = c.benchmark_group("m55_first_100k");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| classify_m55(M55Options { budget: Some(100_000), exec, ..Default::default() }).unwrap())
        });
    }
    group.finish();
}

fn cubic(c: &mut Criterion) {
    let mut group = c.benchmark_group("cubic_degree2");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| black_box(classify_cubic_degree2(None, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, m55_prefix, cubic);
criterion_main!(benches);
