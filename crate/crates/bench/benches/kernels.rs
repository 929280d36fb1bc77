//! Benchmarks for the kernels that dominate suite runtime: Gröbner-based
//! saturation, the symmetrized square map, flat limits, Hilbert data, wall
//! scans, and the curve-count recursion.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use qml_core::curve::kontsevich;
use qml_core::ideal::GradedIdeal;
use qml_core::pipeline::{flat_limit_over_d5, sbar_map, FamilyIdeal};
use qml_core::poly::rat;
use qml_core::scheme::sample::SampleRng;
use qml_core::walls::{wall_scan, ChernCharacter};
use qml_core::VarSet;

fn bench_saturate(c: &mut Criterion) {
    let triangle = GradedIdeal::from_strs(&VarSet::xyz(), &["x*y", "x*z", "y*z"]).unwrap();
    let square = triangle.power(2);
    c.bench_function("saturate triangle square", |b| {
        b.iter(|| black_box(&square).saturate())
    });
}

fn bench_sbar(c: &mut Criterion) {
    let mut rng = SampleRng::new(3);
    let z = rng.triangle();
    c.bench_function("sbar map at a random triangle", |b| {
        b.iter(|| sbar_map(black_box(&z)).unwrap())
    });
}

fn bench_flat_limit(c: &mut Criterion) {
    let family = FamilyIdeal::from_strs(&["x^2", "x*y", "y^2 + t*z*x"]).unwrap();
    c.bench_function("flat limit of the standard family", |b| {
        b.iter(|| flat_limit_over_d5(black_box(&family), (4, 6), &[]).unwrap())
    });
}

fn bench_hilbert(c: &mut Criterion) {
    let mut rng = SampleRng::new(9);
    let square = rng.triangle().vanishing_ideal().unwrap().power(2);
    c.bench_function("hilbert data of a squared ideal", |b| {
        b.iter(|| black_box(&square).hilbert().unwrap())
    });
}

fn bench_walls(c: &mut Criterion) {
    let v = ChernCharacter::new(0, 4, rat(-5)).unwrap();
    c.bench_function("wall scan bounds (2, 8, 16)", |b| {
        b.iter(|| wall_scan(black_box(&v), (2, 8, 16)))
    });
}

fn bench_kontsevich(c: &mut Criterion) {
    c.bench_function("curve counts through degree 10", |b| {
        b.iter(|| kontsevich(black_box(10)))
    });
}

criterion_group!(
    benches,
    bench_saturate,
    bench_sbar,
    bench_flat_limit,
    bench_hilbert,
    bench_walls,
    bench_kontsevich
);
criterion_main!(benches);
