use criterion::{criterion_group, criterion_main, Criterion};
use qhat::{functors, homalg};
use qhat_bench::inputs;
use std::hint::black_box;

fn resolution(c: &mut Criterion) {
    let i = inputs();
    let alg = &i.fixtures.alg;
    c.bench_function("model/A", |b| b.iter(|| functors::model(alg, black_box(&i.a))));
    c.bench_function("serre/E", |b| b.iter(|| functors::serre(alg, black_box(&i.e))));
}

fn hom_spaces(c: &mut Criterion) {
    let i = inputs();
    let alg = &i.fixtures.alg;
    c.bench_function("ext/D,P", |b| b.iter(|| homalg::derived_hom_dims(alg, black_box(&i.d), black_box(&i.p), 0..=2)));
    c.bench_function("support/E,E", |b| b.iter(|| homalg::derived_hom_support(alg, black_box(&i.e), black_box(&i.e))));
}

fn isomorphisms(c: &mut Criterion) {
    let i = inputs();
    let alg = &i.fixtures.alg;
    let se = functors::serre_sub(alg, &i.p, &i.e).expect("E lies in the orthogonal of P");
    let e3 = i.e.shift(3);
    c.bench_function("serre_sub/P,E", |b| b.iter(|| functors::serre_sub(alg, black_box(&i.p), black_box(&i.e))));
    c.bench_function("iso/S(E),E[3]", |b| b.iter(|| homalg::derived_iso(alg, black_box(&se), black_box(&e3))));
    c.bench_function("twist/E,Ct", |b| b.iter(|| functors::spherical_twist(alg, black_box(&i.e), black_box(&i.ct))));
}

criterion_group!(benches, resolution, hom_spaces, isomorphisms);
criterion_main!(benches);
