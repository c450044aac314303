use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mhv_core::harness::{bench_run, generate, Algorithm, BenchInstance, BenchOptions, GeneratorParams};
use mhv_core::heuristic::HeuristicConfig;
use mhv_core::parallel::Execution;

fn instances(count: u64, n: usize) -> Vec<BenchInstance> {
    (0..count)
        .map(|seed| BenchInstance {
            name: format!("er{seed}"),
            instance: generate(&GeneratorParams::hard(n, 3, seed)).unwrap(),
        })
        .collect()
}

fn batch(c: &mut Criterion) {
    let insts = instances(32, 120);
    let algs = [Algorithm::Heuristic(HeuristicConfig::with_width(16))];
    let mut group = c.benchmark_group("heuristic_batch");
    group.sample_size(10);
    for (label, execution) in [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel { workers: None }),
    ] {
        let opts = BenchOptions { timing: false, execution, ..BenchOptions::default() };
        group.bench_with_input(BenchmarkId::new(label, insts.len()), &opts, |b, opts| {
            b.iter(|| black_box(bench_run(&insts, &algs, opts, std::io::sink()).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, batch);
criterion_main!(benches);
