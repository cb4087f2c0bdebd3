//! Property-based checks of the exact-arithmetic kernel.

use nslax::exactalg::{rat, ParamPoly, Rational, UniPoly};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly() -> impl Strategy<Value = ParamPoly> {
    proptest::collection::vec(((0u32..4, 0u32..4), arb_rational()), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .map(|((a, b), c)| ParamPoly::monomial(a, b, c))
            .fold(ParamPoly::zero_poly(), |acc, t| acc + t)
    })
}

fn arb_unipoly() -> impl Strategy<Value = UniPoly<Rational>> {
    proptest::collection::vec(arb_rational(), 0..6).prop_map(UniPoly::new)
}

proptest! {
    #[test]
    fn param_poly_mul_commutes_and_distributes(
        p in arb_poly(), q in arb_poly(), r in arb_poly()
    ) {
        prop_assert_eq!(p.clone() * q.clone(), q.clone() * p.clone());
        prop_assert_eq!(
            p.clone() * (q.clone() + r.clone()),
            p.clone() * q.clone() + p * r
        );
    }

    #[test]
    fn param_poly_eval_is_a_ring_map(
        p in arb_poly(), q in arb_poly(), x in arb_rational(), y in arb_rational()
    ) {
        prop_assert_eq!((p.clone() + q.clone()).eval(&x, &y), p.eval(&x, &y) + q.eval(&x, &y));
        prop_assert_eq!((p.clone() * q.clone()).eval(&x, &y), p.eval(&x, &y) * q.eval(&x, &y));
    }

    #[test]
    fn unipoly_division_invariant(a in arb_unipoly(), b in arb_unipoly()) {
        prop_assume!(!b.is_zero_poly());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(q.mul(&b).add(&r), a);
        if let Some(rd) = r.degree() {
            prop_assert!(rd < b.degree().unwrap());
        }
    }

    #[test]
    fn swap_params_is_an_involution(p in arb_poly()) {
        prop_assert_eq!(p.swap_params().swap_params(), p);
    }
}
