//! Randomized algebraic laws for the arithmetic layers.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use proptest::prelude::*;

use qrwe_core::enumerators::{macwilliams_qr, QuadRingElem};
use qrwe_core::quadratic_forms::kronecker;
use qrwe_core::rs_codes::{brute_qr, build_code, DEFAULT_BUDGET};
use qrwe_core::util::odd_primes_upto;
use qrwe_core::FieldCtx;

const FIELDS: [(u64, u32); 7] = [(3, 1), (3, 2), (3, 3), (5, 2), (7, 2), (11, 1), (13, 1)];

fn fields() -> &'static Vec<Arc<FieldCtx>> {
    static F: OnceLock<Vec<Arc<FieldCtx>>> = OnceLock::new();
    F.get_or_init(|| FIELDS.iter().map(|&(p, v)| Arc::new(FieldCtx::new(p, v).unwrap())).collect())
}

fn pow_mod(mut b: i64, mut e: u64, m: i64) -> i64 {
    b = b.rem_euclid(m);
    let mut acc = 1i64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn norm(x: &QuadRingElem) -> BigInt {
    &x.a * &x.a - BigInt::from(x.square()) * &x.b * &x.b
}

proptest! {
    #[test]
    fn field_laws(f in 0..FIELDS.len(), x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let ctx = &fields()[f];
        let q = ctx.q();
        let (x, y, z) = (ctx.elem(x % q).unwrap(), ctx.elem(y % q).unwrap(), ctx.elem(z % q).unwrap());
        prop_assert_eq!(ctx.mul(x, ctx.add(y, z)), ctx.add(ctx.mul(x, y), ctx.mul(x, z)));
        prop_assert_eq!(ctx.mul(ctx.mul(x, y), z), ctx.mul(x, ctx.mul(y, z)));
        prop_assert_eq!(ctx.add(ctx.sub(x, y), y), x);
        let p = ctx.p();
        prop_assert_eq!(ctx.pow(ctx.add(x, y), p), ctx.add(ctx.pow(x, p), ctx.pow(y, p)));
        if let Some(inv) = ctx.inv(x) {
            prop_assert_eq!(ctx.mul(x, inv), ctx.from_int(1));
        } else {
            prop_assert!(x.is_zero());
        }
    }

    #[test]
    fn quadratic_character(f in 0..FIELDS.len(), x in any::<u64>(), y in any::<u64>()) {
        let ctx = &fields()[f];
        let q = ctx.q();
        let (x, y) = (ctx.elem(x % q).unwrap(), ctx.elem(y % q).unwrap());
        prop_assert_eq!(ctx.chi(ctx.mul(x, y)), ctx.chi(x) * ctx.chi(y));
        let euler = ctx.pow(x, (q - 1) / 2);
        let expect = match ctx.chi(x) {
            0 => ctx.from_int(0),
            1 => ctx.from_int(1),
            _ => ctx.from_int(-1),
        };
        prop_assert_eq!(euler, expect);
        prop_assert_eq!(ctx.is_square(ctx.mul(x, x)), true);
    }

    #[test]
    fn kronecker_is_multiplicative(delta in -5000i64..5000, m in 1u64..500, n in 1u64..500) {
        prop_assert_eq!(
            kronecker(delta, m * n).unwrap(),
            kronecker(delta, m).unwrap() * kronecker(delta, n).unwrap()
        );
    }

    #[test]
    fn kronecker_is_euler_at_odd_primes(delta in -5000i64..5000, p in prop::sample::select(odd_primes_upto(400))) {
        let e = pow_mod(delta, (p - 1) / 2, p as i64);
        let expect = match e { 0 => 0, 1 => 1, _ => -1 };
        prop_assert_eq!(kronecker(delta, p).unwrap(), expect);
    }

    #[test]
    fn quadratic_ring_laws(
        q in prop::sample::select(vec![3u64, 5, 7, 9, 13, 25, 27]),
        coeffs in prop::array::uniform6(-1000i64..1000),
    ) {
        let s = QuadRingElem::square_for(q);
        let x = QuadRingElem::new(coeffs[0], coeffs[1], s);
        let y = QuadRingElem::new(coeffs[2], coeffs[3], s);
        let z = QuadRingElem::new(coeffs[4], coeffs[5], s);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!(norm(&(&x * &y)), norm(&x) * norm(&y));
        let xx = &x * &x.conj();
        prop_assert_eq!(xx.b.clone(), BigInt::from(0));
        prop_assert_eq!(xx.a, norm(&x));
        prop_assert_eq!(x.pow(3), &(&x * &x) * &x);
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x + &(-&x), QuadRingElem::zero(s));
    }
}

#[test]
fn macwilliams_is_an_involution_on_rs_duals() {
    for (p, v) in [(5, 1), (3, 2)] {
        let ctx = Arc::new(FieldCtx::new(p, v).unwrap());
        let q = ctx.q();
        let n = q as usize + 1;
        // Both dimensions at most 6 keeps every brute-force run small.
        for h in n.saturating_sub(7)..=(n - 2).min(5) {
            let code = build_code(ctx.clone(), h, true).unwrap();
            let e = brute_qr(&code, DEFAULT_BUDGET).unwrap();
            let dual = macwilliams_qr(&e, &code.size()).unwrap();
            let dual_code = build_code(ctx.clone(), n - 2 - h, true).unwrap();
            assert!(code.is_orthogonal_to(&dual_code));
            assert_eq!(dual, brute_qr(&dual_code, DEFAULT_BUDGET).unwrap(), "q = {q}, h = {h}");
            assert_eq!(macwilliams_qr(&dual, &dual_code.size()).unwrap(), e, "q = {q}, h = {h}");
        }
    }
}
