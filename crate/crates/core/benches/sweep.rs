use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use greedy_galois::sweep::{run_sweep, Grid, SweepOptions, SweepSpec};
use greedy_galois::{Execution, Rational};

fn strategies() -> Vec<(&'static str, Execution)> {
    vec![
        ("sequential", Execution::Sequential),
        #[cfg(feature = "parallel")]
        ("parallel", Execution::Parallel),
    ]
}

fn sweep_benchmarks(c: &mut Criterion) {
    let spec = SweepSpec::inverse_p(
        Rational::integer(2),
        Rational::integer(50),
        300,
        Grid::UniformInverseP,
    )
    .unwrap();

    let mut group = c.benchmark_group("sweep_inverse_p_300");
    for simulate in [false, true] {
        let opts = SweepOptions {
            simulate,
            ..SweepOptions::default()
        };
        let label = if simulate { "closed+sim" } else { "closed" };
        for (name, exec) in strategies() {
            group.bench_with_input(BenchmarkId::new(name, label), &opts, |b, opts| {
                b.iter(|| run_sweep(&spec, opts, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(
    name = benches;
    config = Criterion::default().sample_size(10).configure_from_args();
    targets = sweep_benchmarks
);
criterion_main!(benches);
