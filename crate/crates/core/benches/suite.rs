use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use socle_core::{run_suite, Bounds, Context, Execution, SuiteName};

// A fresh context per iteration so memo tables do not carry over between runs.
fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10).measurement_time(Duration::from_secs(20));
    let bounds = Bounds::default();
    let mut modes = vec![Execution::Sequential];
    if Execution::parallel_available() {
        modes.push(Execution::Parallel);
    }
    for suite in [SuiteName::Kdv, SuiteName::Prop2, SuiteName::Theorem3, SuiteName::All] {
        for &exec in &modes {
            group.bench_with_input(BenchmarkId::new(suite.as_str(), format!("{exec:?}")), &exec, |b, &exec| {
                b.iter(|| {
                    let ctx = Context::new();
                    black_box(run_suite(suite, &bounds, &ctx, exec).unwrap())
                })
            });
        }
    }
    group.finish();
}

fn brackets(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket_table");
    group.sample_size(10);
    for max_sum in [12usize, 18, 24] {
        group.bench_with_input(BenchmarkId::new("engine_antidiagonals", max_sum), &max_sum, |b, &n| {
            b.iter(|| {
                let ctx = Context::new();
                let items: Vec<u32> = (0..=n as u32).collect();
                black_box(socle_core::par::map(items, Execution::Sequential, |s| {
                    (0..=s).map(|a| ctx.bracket(&[0, a, s - a]).value).collect::<Vec<_>>()
                }))
            })
        });
        group.bench_with_input(BenchmarkId::new("tau_zero_table", max_sum), &max_sum, |b, &n| {
            b.iter(|| black_box(socle_core::kdv::TauZeroTable::build(n)))
        });
    }
    group.finish();
}

criterion_group!(benches, suites, brackets);
criterion_main!(benches);
