use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use radial_hermite::{
    gram_matrix, parse_rational, radial_hermite, radial_hermite_family, spectrum_table, Method,
    ModelParams,
};

fn params(r: u32, nu: &str) -> ModelParams {
    ModelParams::new(r, parse_rational(nu).unwrap()).unwrap()
}

fn construction(c: &mut Criterion) {
    let p = params(5, "7/3");
    let mut group = c.benchmark_group("hermite");
    for n in [20u32, 40, 80] {
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| radial_hermite(&p, black_box(n), Method::Recurrence))
        });
        group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| radial_hermite(&p, black_box(n), Method::ClosedForm))
        });
    }
    group.bench_function("family_80", |b| {
        b.iter(|| radial_hermite_family(&p, black_box(80)))
    });
    group.finish();
}

fn gram(c: &mut Criterion) {
    let mut group = c.benchmark_group("gram");
    group.sample_size(20);
    for (r, nu) in [(1, "1/2"), (3, "1"), (5, "7/3")] {
        let p = params(r, nu);
        group.bench_function(BenchmarkId::new("nmax_24", format!("r{r}")), |b| {
            b.iter(|| gram_matrix(&p, black_box(24)).unwrap())
        });
    }
    group.finish();
}

fn spectrum(c: &mut Criterion) {
    let p = params(3, "1/2");
    let mut group = c.benchmark_group("spectrum");
    group.sample_size(20);
    group.bench_function("nmax_40", |b| {
        b.iter(|| spectrum_table(&p, black_box(40)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, construction, gram, spectrum);
criterion_main!(benches);
