//! Sequential against data-parallel execution of the roundtrip sweep.
//! Without the `parallel` feature both arms run sequentially.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gradedalg::sweep::{grid, run_points, Execution, SweepConfig};

fn sweep_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("roundtrip_sweep");
    group.sample_size(10);
    for (label, config) in [
        ("abelian", SweepConfig { groups: vec!["Z2".into(), "Z2xZ2".into()], seeds: 4, ..SweepConfig::default() }),
        ("default_grid", SweepConfig { seeds: 2, ..SweepConfig::default() }),
    ] {
        let points = grid(&config).expect("grid builds");
        for (mode, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            group.bench_with_input(BenchmarkId::new(mode, label), &points, |b, pts| {
                b.iter(|| {
                    let report = run_points(pts, config.seeds, exec);
                    assert!(report.all_passed());
                    report
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweep_modes);
criterion_main!(benches);
