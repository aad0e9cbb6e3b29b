use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use matsuo_core::constructions::{matsuo_algebra, p3_matsuo, MatsuoSpec};
use matsuo_core::fischer::{gamma_of_rootsystem, roots_of, RootType};
use matsuo_core::{FieldSpec, Matrix};

fn jordan_check(c: &mut Criterion) {
    let mut g = c.benchmark_group("jordan_check");
    g.sample_size(10);
    let p3 = p3_matsuo(FieldSpec::Prime(3));
    g.bench_function("P3 over F3", |b| b.iter(|| black_box(&p3).jordan_check()));
    let a5 = gamma_of_rootsystem(&roots_of(RootType::A(5))).unwrap();
    let m = matsuo_algebra(&MatsuoSpec::half(a5, FieldSpec::Rationals));
    g.bench_function("Sym(6) over Q", |b| b.iter(|| black_box(&m).jordan_check()));
    g.finish();
}

fn rref(c: &mut Criterion) {
    // Dense rational matrix with growing entries; row reduction cost is
    // dominated by bignum arithmetic.
    let n = 24;
    let f = FieldSpec::Rationals;
    let m = Matrix::from_fn(f, n, n, |i, j| {
        f.ratio(((i * 7 + j * 3) % 11) as i64 - 5, (i + j + 1) as i64).unwrap()
    });
    c.bench_function("rref 24x24 over Q", |b| b.iter(|| black_box(&m).rref()));
    let p = FieldSpec::Prime(101);
    let m = Matrix::from_fn(p, 64, 64, |i, j| p.from_i64(((i * 31 + j * 17) % 101) as i64));
    c.bench_function("rref 64x64 over F101", |b| b.iter(|| black_box(&m).rref()));
}

criterion_group!(benches, jordan_check, rref);
criterion_main!(benches);
