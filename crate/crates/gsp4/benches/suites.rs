use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gsp4::suites::{run_suites, Suite, DEFAULT_SEED};

fn bench_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("verification_suites");
    group.sample_size(10);
    let suites = [Suite::Lemmas, Suite::Ramified, Suite::Smith, Suite::Classgroup, Suite::Epsilon];
    let threads = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(4).max(2);
    let mut modes = vec![("sequential", 1usize)];
    if cfg!(feature = "parallel") {
        modes.push(("parallel", threads));
    }
    for (name, jobs) in modes {
        group.bench_with_input(BenchmarkId::new(name, jobs), &jobs, |b, &jobs| {
            b.iter(|| run_suites(&suites, DEFAULT_SEED, jobs))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_suites);
criterion_main!(benches);
