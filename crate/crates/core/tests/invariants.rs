use num_bigint::BigUint;
use proptest::prelude::*;

use normal_depth::frobenius::{circle_action, is_normal};
use normal_depth::{ExtCtx, FieldCtx, FrobeniusModule, Poly};

fn fields() -> impl Strategy<Value = (u64, usize)> {
    prop::sample::select(vec![(2, 8), (3, 4), (4, 5), (9, 3), (16, 2), (5, 6), (7, 3), (3, 6)])
}

fn ext(q: u64, n: usize) -> ExtCtx {
    ExtCtx::new(&FieldCtx::with_order(q).unwrap(), n, None).unwrap()
}

fn poly_from(field: &FieldCtx, raw: &[u32]) -> Poly {
    Poly::new(raw.iter().map(|&r| field.element(r % field.q() as u32)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((q, n) in fields(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let e = ext(q, n);
        let order = e.order().unwrap();
        let (a, b, c) = (e.element(a % order), e.element(b % order), e.element(c % order));
        let ab = e.mul(&a, &b).unwrap();
        prop_assert_eq!(&ab, &e.mul(&b, &a).unwrap());
        prop_assert_eq!(e.mul(&ab, &c).unwrap(), e.mul(&a, &e.mul(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(
            e.mul(&a, &e.add(&b, &c).unwrap()).unwrap(),
            e.add(&ab, &e.mul(&a, &c).unwrap()).unwrap()
        );
        if !a.is_zero() {
            prop_assert_eq!(e.mul(&a, &e.inv(&a).unwrap()).unwrap(), e.one());
        }
        prop_assert_eq!(e.sub(&e.add(&a, &b).unwrap(), &b).unwrap(), a);
    }

    #[test]
    fn frobenius_is_q_power((q, n) in fields(), a in any::<u64>(), b in any::<u64>()) {
        let e = ext(q, n);
        let order = e.order().unwrap();
        let (a, b) = (e.element(a % order), e.element(b % order));
        prop_assert_eq!(e.frobenius(&a), e.pow(&a, &BigUint::from(q)).unwrap());
        prop_assert_eq!(e.frobenius_pow(&a, n), a.clone());
        prop_assert_eq!(
            e.frobenius(&e.mul(&a, &b).unwrap()),
            e.mul(&e.frobenius(&a), &e.frobenius(&b)).unwrap()
        );
        let f = e.base();
        prop_assert_eq!(
            e.trace_to_base(&e.add(&a, &b).unwrap()),
            f.add(e.trace_to_base(&a), e.trace_to_base(&b))
        );
        prop_assert_eq!(e.trace_to_base(&e.one()), f.from_int((n as u64 % f.p()) as i64));
    }

    #[test]
    fn circle_action_is_a_module_action(
        (q, n) in fields(),
        beta in any::<u64>(),
        f in prop::collection::vec(any::<u32>(), 0..10),
        g in prop::collection::vec(any::<u32>(), 0..10),
    ) {
        let e = ext(q, n);
        let ring = e.base().poly_ring();
        let beta = e.element(beta % e.order().unwrap());
        let (f, g) = (poly_from(e.base(), &f), poly_from(e.base(), &g));
        let fg = ring.mul(&f, &g);
        prop_assert_eq!(
            circle_action(&e, &fg, &beta),
            circle_action(&e, &f, &circle_action(&e, &g, &beta))
        );
        prop_assert_eq!(
            circle_action(&e, &ring.add(&f, &g), &beta),
            e.add(&circle_action(&e, &f, &beta), &circle_action(&e, &g, &beta)).unwrap()
        );
        prop_assert!(circle_action(&e, &ring.x_pow_minus_one(n), &beta).is_zero());
    }

    #[test]
    fn phi_alpha_relations(
        (q, n) in prop::sample::select(vec![(2, 8), (3, 4), (4, 5), (7, 3), (3, 6), (2, 12)]),
        beta in any::<u64>(),
        k in 1u32..13,
    ) {
        let m = FrobeniusModule::from_order(q, n).unwrap();
        let e = &m.ext;
        let ring = e.base().poly_ring();
        let beta = e.element(beta % e.order().unwrap());
        let g = m.map.phi_inverse(&beta);
        prop_assert_eq!(m.map.phi(&g), beta.clone());
        let xg = ring.rem(&ring.mul(&ring.x(), &g), m.map.modulus()).unwrap();
        prop_assert_eq!(m.map.phi_inverse(&e.frobenius(&beta)), xg);
        let comps = m.decomposition.components(e, &beta);
        let sum = comps.iter().fold(e.zero(), |acc, c| e.add(&acc, c).unwrap());
        prop_assert_eq!(sum, beta.clone());
        for (c, part) in comps.iter().zip(m.decomposition.parts()) {
            prop_assert!(circle_action(e, part, c).is_zero());
        }
        let p = e.base().p() as u32;
        if k % p != 0 {
            let scaled = e.scale(e.base().from_int(i64::from(k)), m.map.alpha());
            prop_assert!(is_normal(e, &scaled));
        }
        prop_assert_eq!(is_normal(e, &beta), m.map.is_normal_gcd(&beta));
    }
}
