use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use myb_bench::{entry, so_bunch};
use myb_core::identities::{check_jacobi, check_jts_identity};
use myb_core::rrho::check_gamma_bunch;
use myb_core::JtsVariant;

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for name in ["so3", "so4", "gl2", "gl3"] {
        let b = entry(name).bracket.expect("bracket");
        group.bench_with_input(BenchmarkId::from_parameter(name), &b, |bench, b| bench.iter(|| check_jacobi(b)));
    }
    group.finish();
}

fn jts(c: &mut Criterion) {
    let mut group = c.benchmark_group("jts-identity");
    group.sample_size(10);
    let t = entry("gl2").triple.expect("triple");
    for variant in JtsVariant::ALL {
        group.bench_with_input(BenchmarkId::new("gl2", variant), &t, |bench, t| {
            bench.iter(|| check_jts_identity(t, variant))
        });
    }
    group.finish();
}

fn gamma_bunch(c: &mut Criterion) {
    let mut group = c.benchmark_group("gamma-bunch");
    group.sample_size(10);
    for n in [3, 4] {
        let bunch = so_bunch(n);
        group.bench_with_input(BenchmarkId::new("so", n), &bunch, |bench, q| bench.iter(|| check_gamma_bunch(q)));
    }
    group.finish();
}

criterion_group!(benches, jacobi, jts, gamma_bunch);
criterion_main!(benches);
