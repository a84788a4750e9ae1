use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sieve_core::golden::{check_rank_identity, normalize, run_golden};
use sieve_core::par;
use sieve_core::GroundSequence;

fn points() -> Vec<(u64, u64)> {
    (2..=9u64)
        .flat_map(|a| (0..a).map(move |b| (a, b)))
        .collect()
}

fn residual(&(a, b): &(u64, u64), n: u64) -> u64 {
    let t = run_golden(&GroundSequence::arith(a, b).unwrap(), n, n).unwrap();
    check_rank_identity(&normalize(&t).unwrap()).unwrap()
}

fn rank_identity_grid(c: &mut Criterion) {
    let pts = points();
    let mut group = c.benchmark_group("rank-identity-grid");
    group.sample_size(10);
    for n in [2_000u64, 20_000] {
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |bch, &n| {
            bch.iter(|| par::map_sequential(black_box(&pts), |p| residual(p, n)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |bch, &n| {
            bch.iter(|| par::map_parallel(black_box(&pts), |p| residual(p, n)))
        });
    }
    group.finish();
}

criterion_group!(benches, rank_identity_grid);
criterion_main!(benches);
