//! Sequential vs parallel strategy on the three bulk kernels. On a
//! single-core host the two should sit within noise of each other; the
//! point of the suite is catching regressions where the parallel path adds
//! overhead without spreading work.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weakdual_core::cones::enumerate_relevant_with;
use weakdual_core::engine::duality_checker_with;
use weakdual_core::integrality::oracle_agreement_ginzburg_with;
use weakdual_core::par::Exec;
use weakdual_core::rootdata::load_case;
use weakdual_core::sampling::sample_satake;

const STRATEGIES: [(&str, Exec); 2] =
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn bench_enumeration(c: &mut Criterion) {
    let cd = load_case("garrett_dual").unwrap();
    let mut g = c.benchmark_group("enumerate_relevant/garrett_dual@6");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| enumerate_relevant_with(cd, 6, exec).unwrap().total())
        });
    }
    g.finish();
}

fn bench_integrality_grid(c: &mut Criterion) {
    let mut g = c.benchmark_group("integrality_grid/ginzburg@3");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let r = oracle_agreement_ginzburg_with(3, -2, 2, exec).unwrap();
                assert!(r.pass());
                r.grid_size
            })
        });
    }
    g.finish();
}

fn bench_duality_tables(c: &mut Criterion) {
    let cd = load_case("ginzburg_auto").unwrap();
    let points = sample_satake(cd.rank, 4, 9);
    let mut g = c.benchmark_group("duality_checker/ginzburg@5");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                let checker = duality_checker_with(cd, 5, exec).unwrap();
                points.iter().filter(|p| checker.verify(p).unwrap().pass).count()
            })
        });
    }
    g.finish();
}

criterion_group!(benches, bench_enumeration, bench_integrality_grid, bench_duality_tables);
criterion_main!(benches);
