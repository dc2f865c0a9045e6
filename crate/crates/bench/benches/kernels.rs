use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use dgforge::catalog;
use dgforge::dgideal::{radical_report, singular_ideals};
use dgforge::dgmod::{dg_udim, DgModule};
use dgforge::dgpoly::{PolyRing, Window};
use dgforge::exactla::Field;
use dgforge::orelocal::{homology_comparison_poly, localise_findim, localise_poly, verify_localisation, Mode};

fn kernels(c: &mut Criterion) {
    let q = Field::Rational;
    let big = catalog::mat2_dg(Field::Prime(3)).tensor(&catalog::mat2_dg(Field::Prime(3)));
    c.bench_function("validate mat2⊗mat2/F3", |b| b.iter(|| black_box(&big).validate()));
    c.bench_function("radicals mat2⊗mat2/F3", |b| b.iter(|| radical_report(black_box(&big), 0)));
    c.bench_function("singular ideals mat2⊗mat2/F3", |b| b.iter(|| singular_ideals(black_box(&big))));
    c.bench_function("dg udim mat2⊗mat2/F3", |b| {
        b.iter(|| dg_udim(&DgModule::regular_right(black_box(&big))).bounds())
    });

    let m = catalog::mat2_dg(q);
    let units = vec![m.named(&[(1, "e11"), (2, "e22")]), m.named(&[(3, "e11"), (1, "e22")])];
    let loc = localise_findim(&m, &units, Mode::Regular).unwrap();
    c.bench_function("verify localisation mat2/Q, 100 samples", |b| {
        b.iter(|| verify_localisation(black_box(&loc), 100, 0))
    });

    let r = PolyRing::kx(q);
    let lx = localise_poly(&r, &[r.var_power(0, 1)], Mode::Regular).unwrap();
    c.bench_function("verify localisation K[X] at X, 100 samples", |b| {
        b.iter(|| verify_localisation(black_box(&lx), 100, 0))
    });
    c.bench_function("homology comparison K[X] at X^2 on [-20, 20]", |b| {
        b.iter(|| homology_comparison_poly(&r, &[r.var_power(0, 2)], Window::symmetric(20)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = kernels
}
criterion_main!(benches);
