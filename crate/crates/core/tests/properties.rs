//! Property tests for the exact arithmetic layers: field axioms, row
//! reduction invariants, and Kronecker multiplicativity.

use std::sync::Arc;

use proptest::prelude::*;

use cliffmod::linalg::Matrix;
use cliffmod::{make_field, FieldCtx};

fn field(p: u64, k: usize) -> Arc<FieldCtx> {
    Arc::new(make_field(p, k, None).unwrap())
}

fn matrix_from_seeds(ctx: &Arc<FieldCtx>, rows: usize, cols: usize, seeds: &[u64]) -> Matrix {
    let q = ctx.order();
    Matrix::from_fn(ctx, rows, cols, |i, j| ctx.unpack(seeds[i * cols + j] % q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in 0u64..10_000, b in 0u64..10_000, c in 0u64..10_000,
                    which in 0usize..4) {
        let params = [(2, 4), (3, 2), (5, 1), (7, 2)];
        let (p, k) = params[which];
        let ctx = field(p, k);
        let q = ctx.order();
        let (x, y, z) = (ctx.unpack(a % q), ctx.unpack(b % q), ctx.unpack(c % q));
        prop_assert_eq!(ctx.mul(ctx.mul(x, y), z), ctx.mul(x, ctx.mul(y, z)));
        prop_assert_eq!(ctx.add(ctx.add(x, y), z), ctx.add(x, ctx.add(y, z)));
        prop_assert_eq!(ctx.mul(x, ctx.add(y, z)), ctx.add(ctx.mul(x, y), ctx.mul(x, z)));
        prop_assert_eq!(ctx.mul(x, y), ctx.mul(y, x));
        if !x.is_zero() {
            prop_assert_eq!(ctx.mul(ctx.inv(x), x), ctx.one());
        }
        prop_assert_eq!(ctx.pow(x, q), x, "Frobenius fixed point: x^q = x");
    }

    #[test]
    fn rref_rank_nullity_and_idempotence(seeds in prop::collection::vec(any::<u64>(), 36),
                                         which in 0usize..3) {
        let params = [(2, 2), (3, 1), (5, 1)];
        let (p, k) = params[which];
        let ctx = field(p, k);
        let m = matrix_from_seeds(&ctx, 6, 6, &seeds);
        let (r, rank, _) = m.rref();
        prop_assert_eq!(rank + m.kernel_basis().len(), 6);
        let (r2, rank2, _) = r.rref();
        prop_assert_eq!(rank, rank2);
        prop_assert!(r.sub(&r2).is_zero(), "row reduction is idempotent");
    }

    #[test]
    fn inverse_round_trip(seeds in prop::collection::vec(any::<u64>(), 25)) {
        let ctx = field(3, 2);
        let m = matrix_from_seeds(&ctx, 5, 5, &seeds);
        if let Some(inv) = m.inverse() {
            prop_assert!(m.mul(&inv).is_identity());
            prop_assert!(inv.mul(&m).is_identity());
        } else {
            let (_, rank, _) = m.rref();
            prop_assert!(rank < 5, "only singular matrices lack inverses");
        }
    }

    #[test]
    fn kron_multiplicativity(a in prop::collection::vec(any::<u64>(), 4),
                             b in prop::collection::vec(any::<u64>(), 9),
                             c in prop::collection::vec(any::<u64>(), 4),
                             d in prop::collection::vec(any::<u64>(), 9)) {
        let ctx = field(5, 1);
        let ma = matrix_from_seeds(&ctx, 2, 2, &a);
        let mb = matrix_from_seeds(&ctx, 3, 3, &b);
        let mc = matrix_from_seeds(&ctx, 2, 2, &c);
        let md = matrix_from_seeds(&ctx, 3, 3, &d);
        let lhs = ma.kron(&mb).unwrap().mul(&mc.kron(&md).unwrap());
        let rhs = ma.mul(&mc).kron(&mb.mul(&md)).unwrap();
        prop_assert!(lhs.sub(&rhs).is_zero());
    }
}
