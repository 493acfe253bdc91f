//! Benchmarks the oracle verify suite: the rayon data-parallel driver
//! against the sequential fallback, on the same cell set.

use criterion::{criterion_group, criterion_main, Criterion};

use secant_hodge::oracle::{run_verify, run_verify_sequential, VerifyConfig};

fn bench_verify(c: &mut Criterion) {
    let config = VerifyConfig {
        g_max: 1,
        k_max: 3,
        depth: 2,
        inject_fault: false,
    };
    let mut group = c.benchmark_group("verify-suite");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let results = run_verify(&config);
            assert!(results.iter().all(|r| r.passed));
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let results = run_verify_sequential(&config);
            assert!(results.iter().all(|r| r.passed));
        })
    });
    group.finish();
}

criterion_group!(benches, bench_verify);
criterion_main!(benches);
