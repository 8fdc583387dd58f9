use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};

use cliffmod::brauer::brauer_table;
use cliffmod::group::builders;
use cliffmod::linalg::Matrix;
use cliffmod::make_field;
use cliffmod::rep::Representation;
use cliffmod::structure::is_irreducible;

fn bench_rref(c: &mut Criterion) {
    let ctx = Arc::new(make_field(3, 2, None).unwrap());
    let q = ctx.order();
    // a fixed pseudo-random dense matrix; the multiplier walk covers F_9
    let mut state = 1u64;
    let m = Matrix::from_fn(&ctx, 48, 48, |_, _| {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
        ctx.unpack(state % q)
    });
    c.bench_function("rref 48x48 over F_9", |b| b.iter(|| m.rref()));
}

fn bench_meataxe(c: &mut Criterion) {
    let sl2 = Arc::new(builders::make_sl2(5).unwrap());
    let ctx = sl2.ctx().clone();
    let nat = Representation::natural(&sl2, &ctx).unwrap();
    c.bench_function("meataxe natural SL2(F5)", |b| {
        b.iter(|| is_irreducible(&nat, 1).unwrap())
    });
    let sl2f3 = Arc::new(builders::make_sl2(3).unwrap());
    let reg = Representation::regular(&sl2f3, sl2f3.ctx());
    c.bench_function("meataxe regular SL2(F3), degree 24", |b| {
        b.iter(|| is_irreducible(&reg, 1).unwrap())
    });
}

fn bench_table(c: &mut Criterion) {
    let sl2 = Arc::new(builders::make_sl2(3).unwrap());
    c.bench_function("brauer table SL2(F3)", |b| {
        b.iter(|| brauer_table(&sl2, 3, 1).unwrap())
    });
}

criterion_group!(benches, bench_rref, bench_meataxe, bench_table);
criterion_main!(benches);
