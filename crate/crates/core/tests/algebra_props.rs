mod common;

use common::{g, Gen};
use proptest::prelude::*;
use similitude::algebra::linalg::rank;
use similitude::{
    generic_rank, rational_to_jet, vars, GaussianRational, Jet, Monomial, Poly, RationalFunction,
};

fn zw() -> similitude::algebra::Vars {
    vars(&["z", "w"])
}

/// Random polynomial in `z, w` of total degree ≤ 6 with small Gaussian
/// integer coefficients.
fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..=6, 0u32..=6), (-5i64..=5, -2i64..=2)), 0..8).prop_map(|terms| {
        Poly::from_terms(
            zw(),
            terms
                .into_iter()
                .filter(|((a, b), _)| a + b <= 6)
                .map(|((a, b), (re, im))| (Monomial::new(vec![a, b]), GaussianRational::from_parts((re, 1), (im, 1)))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn poly_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn jet_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let (ja, jb, jc) = (Jet::from_poly(&a, 5), Jet::from_poly(&b, 5), Jet::from_poly(&c, 5));
        prop_assert_eq!(&(&ja * &jb) * &jc, &ja * &(&jb * &jc));
        prop_assert_eq!(&ja * &(&jb + &jc), &(&ja * &jb) + &(&ja * &jc));
        prop_assert_eq!(&ja * &jb, &jb * &ja);
        // Truncation is a ring map.
        prop_assert_eq!(&ja * &jb, Jet::from_poly(&(&a * &b), 5));
    }

    #[test]
    fn jet_of_reciprocal(num in arb_poly(), den in arb_poly(), c in 1i64..5) {
        // Replace constant terms so both are units at the origin.
        let unit = |p: &Poly, c: i64| &(p - &Poly::constant(zw(), p.constant_term())) + &Poly::from_integer(zw(), c);
        let (num, den) = (unit(&num, c + 1), unit(&den, c));
        let f = RationalFunction::new(num, den).unwrap();
        let inv = f.inv().unwrap();
        let prod = &rational_to_jet(&f, 6).unwrap() * &rational_to_jet(&inv, 6).unwrap();
        prop_assert_eq!(prod, Jet::one(zw(), 6));
    }

    #[test]
    fn evaluation_composes_with_substitution(
        p in arb_poly(), s in arb_poly(), t in arb_poly(),
        x in (-3i64..=3, -3i64..=3), y in (-3i64..=3, 1i64..=3),
    ) {
        let pt = [GaussianRational::from_parts((x.0, 1), (x.1, 1)), GaussianRational::from_parts((y.0, y.1), (0, 1))];
        let composed = p.substitute(&[("z", s.clone()), ("w", t.clone())]).unwrap();
        let pre = [s.eval(&pt).unwrap(), t.eval(&pt).unwrap()];
        prop_assert_eq!(composed.eval(&pt).unwrap(), p.eval(&pre).unwrap());
    }
}

#[test]
fn generic_rank_dominates_pointwise_rank() {
    let mut gen = Gen::new(11);
    for _ in 0..10 {
        let rows = gen.int(1, 4) as usize;
        let cols = gen.int(1, 4) as usize;
        let m = if gen.coin(0.5) {
            gen.poly_matrix(rows, cols, 3)
        } else {
            let xi = gen.special_point();
            gen.structured_matrix(rows, cols, &xi)
        };
        let r = generic_rank(&m);
        for _ in 0..20 {
            let pt = gen.scalar();
            assert!(rank(&m.eval(&[pt]).unwrap()) <= r);
        }
        // The special points are where drops happen.
        for p in ["0", "1", "-1", "1/2", "i", "2-i"] {
            assert!(rank(&m.eval(&[g(p)]).unwrap()) <= r);
        }
    }
}
