//! Sequential vs data-parallel sweeps. Each workload runs inside a one-thread
//! rayon pool and inside a pool sized to the machine. Build with
//! `--no-default-features` to time the plain-iterator fallback instead.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use emw_core::candidates::CaseKind;
use emw_core::figures::figure1_rows;
use emw_core::search::find_solutions_sharded;
use emw_core::signanalysis::{ratio_series, sign_summary};
use emw_core::DivisorBudget;
use rayon::ThreadPoolBuilder;

fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let n = std::thread::available_parallelism().map_or(1, |n| n.get());
    let pool = |t| ThreadPoolBuilder::new().num_threads(t).build().unwrap();
    vec![("sequential".to_string(), pool(1)), (format!("parallel-{n}"), pool(n))]
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("search_k1-12_m3-5000");
    g.sample_size(10);
    for (name, pool) in pools() {
        let shards = pool.current_num_threads().max(1);
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| find_solutions_sharded(1..=12, 3..=5000, shards).unwrap()))
        });
    }
    g.finish();
}

fn signs(c: &mut Criterion) {
    let mut g = c.benchmark_group("sign_summary_k200");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| sign_summary(200, DivisorBudget::default()).unwrap()))
        });
    }
    g.finish();
}

fn ratios(c: &mut Criterion) {
    let mut g = c.benchmark_group("ratio_series_odd_kp1_3-401");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| ratio_series(CaseKind::OddKp1, 3, 401, 2).unwrap()))
        });
    }
    g.finish();
}

fn figure1(c: &mut Criterion) {
    let mut g = c.benchmark_group("figure1_k2-40_m3-200");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| figure1_rows(2..=40, 3..=200).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, search, signs, ratios, figure1);
criterion_main!(benches);
