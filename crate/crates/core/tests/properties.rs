use proptest::prelude::*;

use skeindaha::cluster::{poisson_bracket, Seed};
use skeindaha::exact::{poly_sqrt, poly_substitute, Substitution};
use skeindaha::pi1::{free_reduce, FreeWord, Gen, Letter};
use skeindaha::qdiff::Operator;
use skeindaha::{Context, LaurentPoly, Monomial, RationalFn, Scalar};

fn poly_in(ctx: Context, max_terms: usize, max_exp: i32) -> impl Strategy<Value = LaurentPoly> {
    let n = ctx.nvars();
    prop::collection::vec((-3i64..=3, prop::collection::vec(-max_exp..=max_exp, n)), 0..=max_terms).prop_map(move |ts| {
        LaurentPoly::from_terms(ctx, ts.into_iter().map(|(c, e)| (Monomial::from_slice(&e), Scalar::from_int(c))))
    })
}

fn nonzero_poly(ctx: Context) -> impl Strategy<Value = LaurentPoly> {
    poly_in(ctx, 3, 2).prop_filter("nonzero", |p| !p.is_zero())
}

fn operator() -> impl Strategy<Value = Operator> {
    prop::collection::vec((0u8..=1, -2i32..=2, -1i32..=1, poly_in(Context::Operator, 2, 1)), 1..=3).prop_map(|ts| {
        ts.into_iter()
            .fold(Operator::zero(), |acc, (eps, m, n, p)| &acc + &(&Operator::mul_by_poly(p) * &Operator::shift(eps, m, n)))
    })
}

fn free_letters() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0usize..4, any::<bool>()), 0..12)
        .prop_map(|ls| FreeWord::raw(&ls.into_iter().map(|(g, inv)| (Gen::ALL[g], if inv { -1 } else { 1 })).collect::<Vec<_>>()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in poly_in(Context::Operator, 4, 2), b in poly_in(Context::Operator, 4, 2), c in poly_in(Context::Operator, 4, 2)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&(&a + &b) - &b == a));
    }

    #[test]
    fn rational_functions_divide_back(a in poly_in(Context::Operator, 3, 2), b in nonzero_poly(Context::Operator), c in nonzero_poly(Context::Operator)) {
        let f = RationalFn::new(a, b.clone()).unwrap();
        let g = RationalFn::from_poly(c);
        prop_assert!((&(&f * &g) / &g).eq_exact(&f));
        prop_assert!((&(&f + &g) - &g).eq_exact(&f));
        prop_assert!((&f * &RationalFn::from_poly(b)).reduce_full().is_poly());
    }

    #[test]
    fn square_root_of_square(p in nonzero_poly(Context::Cluster)) {
        let r = poly_sqrt(&(&p * &p)).unwrap();
        prop_assert!(r == p || r == -&p);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly_in(Context::KRing, 3, 2), b in poly_in(Context::KRing, 3, 2), img in nonzero_poly(Context::KRing)) {
        let rules = [(0, Substitution::General(RationalFn::from_poly(img))), (3, Substitution::Invert)];
        let s = |p: &LaurentPoly| poly_substitute(p, &rules).unwrap();
        prop_assert!(s(&(&a * &b)).eq_exact(&(&s(&a) * &s(&b))));
        prop_assert!(s(&(&a + &b)).eq_exact(&(&s(&a) + &s(&b))));
    }

    #[test]
    fn operator_product_is_associative(a in operator(), b in operator(), c in operator()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn operator_product_is_composition(a in operator(), b in operator(), f in nonzero_poly(Context::Operator)) {
        let f = RationalFn::from_poly(f);
        prop_assert!((&a * &b).apply(&f).eq_exact(&a.apply(&b.apply(&f))));
    }

    #[test]
    fn bracket_is_antisymmetric_and_leibniz(f in poly_in(Context::Cluster, 3, 2), g in poly_in(Context::Cluster, 3, 2), h in poly_in(Context::Cluster, 3, 2)) {
        let (f, g, h) = (RationalFn::from_poly(f), RationalFn::from_poly(g), RationalFn::from_poly(h));
        prop_assert!((&poisson_bracket(&f, &g) + &poisson_bracket(&g, &f)).is_zero());
        let lhs = poisson_bracket(&f, &(&g * &h));
        let rhs = &(&poisson_bracket(&f, &g) * &h) + &(&g * &poisson_bracket(&f, &h));
        prop_assert!(lhs.eq_exact(&rhs));
    }

    #[test]
    fn free_reduction_is_idempotent(ls in free_letters()) {
        let w = free_reduce(ls);
        prop_assert_eq!(free_reduce(w.letters().to_vec()), w.clone());
        prop_assert!(w.mul(&w.inverse()).is_empty());
    }

    #[test]
    fn mutation_is_involutive(ks in prop::collection::vec(1usize..=6, 0..4), k in 1usize..=6) {
        let mut s = Seed::initial();
        for i in ks {
            s = s.mutate(i).unwrap();
        }
        let back = s.mutate(k).unwrap().mutate(k).unwrap();
        prop_assert_eq!(back.to_json(), s.to_json());
    }
}
