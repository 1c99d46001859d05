use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use treepark_core::enumerate::tally_sequential;
use treepark_core::{Budget, DistributionSpec, TStatistic};

fn specs() -> Vec<(&'static str, DistributionSpec)> {
    let mut out = Vec::new();
    for n in [6, 7] {
        out.push(("tree", DistributionSpec::tree(n).unwrap()));
        out.push((
            "parking",
            DistributionSpec::parking(n, TStatistic::Excedances).unwrap(),
        ));
    }
    out
}

fn bench_tally(c: &mut Criterion) {
    let budget = Budget::default();
    let shards = 4;
    let mut group = c.benchmark_group("tally");
    group.sample_size(10);
    for (kind, spec) in specs() {
        let id = format!("{kind}/n={}", spec.n());
        group.bench_with_input(BenchmarkId::new("sequential", &id), &spec, |b, spec| {
            b.iter(|| tally_sequential(spec, shards, &budget).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", &id), &spec, |b, spec| {
            use treepark_core::enumerate::tally_parallel;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(shards)
                .build()
                .unwrap();
            b.iter(|| pool.install(|| tally_parallel(spec, shards, &budget).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_tally);
criterion_main!(benches);
