//! Threshold search on one worker against every available worker. Built
//! without the `parallel` feature both paths run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclic_subwords::parallel::default_jobs;
use cyclic_subwords::survey::{recovery_threshold_with, ThresholdOptions};

fn threshold(c: &mut Criterion) {
    let mut group = c.benchmark_group("recovery_threshold");
    group.sample_size(10);
    let mut jobs = vec![1, default_jobs().max(2)];
    jobs.dedup();
    for n in [14, 16] {
        for &j in &jobs {
            let opts = ThresholdOptions {
                jobs: j,
                checkpoint_dir: None,
                cancel: None,
            };
            group.bench_with_input(BenchmarkId::new(format!("jobs={j}"), n), &n, |b, &n| {
                b.iter(|| recovery_threshold_with(n, &opts).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, threshold);
criterion_main!(benches);
