use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lencat::abcat::{are_isomorphic, ext1, hom_dim};
use lencat::gradedrep::{GradedRep, WeylLabel};
use lencat::weylcat::{catalog_module, verify_theorem, CatalogKey};
use lencat::Scalar;

fn module(key: &str, lo: i64, hi: i64) -> lencat::quiverrep::QuiverRep {
    let key: CatalogKey = key.parse().unwrap();
    catalog_module(&key, lo, hi, 2).unwrap().to_quiver_rep().unwrap()
}

fn hom(c: &mut Criterion) {
    let x = module("M(1/3+1/2*i,4)", -8, 8);
    let y = module("M(1/3+1/2*i,3)", -8, 8);
    c.bench_function("hom M(a,4) -> M(a,3) on [-8,8]", |b| b.iter(|| hom_dim(black_box(&x), black_box(&y))));
    c.bench_function("are_isomorphic M(a,4) on [-8,8]", |b| b.iter(|| are_isomorphic(black_box(&x), black_box(&x))));
}

fn ext(c: &mut Criterion) {
    let (lo, hi) = (-8, 8);
    let s0 = GradedRep::simple(&WeylLabel::Zero, 0, lo, hi).unwrap().to_quiver_rep().unwrap();
    let si = GradedRep::simple(&WeylLabel::Infinity, 1, lo, hi).unwrap().to_quiver_rep().unwrap();
    let a = WeylLabel::Alpha(Scalar::ratio(1, 2));
    let sa = GradedRep::simple(&a, 0, lo, hi).unwrap().to_quiver_rep().unwrap();
    c.bench_function("ext1(M_0, M_inf[1]) on [-8,8]", |b| b.iter(|| ext1(black_box(&s0), black_box(&si))));
    c.bench_function("ext1(M_a, M_a) on [-8,8]", |b| b.iter(|| ext1(black_box(&sa), black_box(&sa))));
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    let alphas = [Scalar::ratio(1, 2)];
    g.bench_function("verify_theorem n <= 3", |b| b.iter(|| verify_theorem(3, &alphas, None, 2, 0).unwrap()));
    g.finish();
}

criterion_group!(benches, hom, ext, verify);
criterion_main!(benches);
