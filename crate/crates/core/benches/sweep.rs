//! Survey throughput: sequential fan-out vs rayon fan-out over the same
//! inventory. Run with `cargo bench -p srlab-core`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use srlab_core::sweep::{run_survey, CheckId, ExecMode, SweepConfig};

fn survey_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("survey");
    group.sample_size(10);
    for bound in [8usize, 12] {
        let cfg = SweepConfig::with_bound(bound);
        group.bench_with_input(BenchmarkId::new("sequential", bound), &cfg, |b, cfg| {
            b.iter(|| {
                let out = run_survey(cfg, &CheckId::ALL, ExecMode::Sequential);
                assert_eq!(out.total_counterexamples(), 0);
                out.pair_count
            })
        });
        group.bench_with_input(BenchmarkId::new("parallel", bound), &cfg, |b, cfg| {
            b.iter(|| {
                let out = run_survey(cfg, &CheckId::ALL, ExecMode::Parallel);
                assert_eq!(out.total_counterexamples(), 0);
                out.pair_count
            })
        });
    }
    group.finish();
}

fn localization_only(c: &mut Criterion) {
    let cfg = SweepConfig::with_bound(12);
    let checks = [
        CheckId::LocalizationOracleIso,
        CheckId::LocalizationUnits,
        CheckId::SDomainIffLocalDomain,
    ];
    c.bench_function("localization oracle sweep (<=12, parallel)", |b| {
        b.iter(|| run_survey(&cfg, &checks, ExecMode::Parallel).pair_count)
    });
}

criterion_group!(benches, survey_modes, localization_only);
criterion_main!(benches);
