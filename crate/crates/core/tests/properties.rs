mod common;

use common::*;
use proptest::prelude::*;
use riordan::{AppellElement, KenterTriple, RiordanElement, TruncatedSeries};

const ORDER: usize = 8;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(128)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_axioms(a in series(ORDER), b in series(ORDER), c in series(ORDER)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), TruncatedSeries::zero(ORDER));
        prop_assert_eq!(&a * &TruncatedSeries::one(ORDER), a.clone());
    }

    #[test]
    fn reciprocal_round_trip(h in h_series(ORDER)) {
        let r = h.reciprocal().unwrap();
        prop_assert_eq!(h.multiply(&r), TruncatedSeries::one(ORDER));
        prop_assert_eq!(r.reciprocal().unwrap(), h);
    }

    #[test]
    fn compositional_inverse_round_trip(g in k_series(ORDER)) {
        let inv = g.compositional_inverse().unwrap();
        prop_assert!(inv.classify().is_k());
        prop_assert_eq!(g.compose(&inv).unwrap(), TruncatedSeries::identity(ORDER));
        prop_assert_eq!(inv.compose(&g).unwrap(), TruncatedSeries::identity(ORDER));
        prop_assert_eq!(inv.compositional_inverse().unwrap(), g);
    }

    #[test]
    fn truncation_consistency(a in h_series(ORDER), b in series(ORDER), g in k_series(ORDER)) {
        let low = |s: &TruncatedSeries| s.truncate(ORDER - 1).unwrap();
        prop_assert_eq!(low(&a.multiply(&b)), low(&a).multiply(&low(&b)));
        prop_assert_eq!(low(&a.reciprocal().unwrap()), low(&a).reciprocal().unwrap());
        prop_assert_eq!(low(&b.compose(&g).unwrap()), low(&b).compose(&low(&g)).unwrap());
        prop_assert_eq!(
            low(&g.compositional_inverse().unwrap()),
            low(&g).compositional_inverse().unwrap()
        );
        prop_assert_eq!(low(&a.power(-3).unwrap()), low(&a).power(-3).unwrap());
    }

    #[test]
    fn composition_respects_products(f1 in series(ORDER), f2 in series(ORDER), g in v_series(ORDER)) {
        prop_assert_eq!(
            f1.multiply(&f2).compose(&g).unwrap(),
            f1.compose(&g).unwrap().multiply(&f2.compose(&g).unwrap())
        );
        prop_assert_eq!(
            f1.add(&f2).compose(&g).unwrap(),
            f1.compose(&g).unwrap().add(&f2.compose(&g).unwrap())
        );
    }

    #[test]
    fn classification_matches_definition(s in series(ORDER)) {
        let class = s.classify();
        let c0 = s.coeff(0).is_zero();
        let c1 = s.coeff(1).is_zero();
        prop_assert_eq!(class.is_h(), !c0);
        prop_assert_eq!(class.is_k(), c0 && !c1);
        prop_assert_eq!(class.is_v(), c0);
    }

    #[test]
    fn group_axioms(e1 in element(ORDER), e2 in element(ORDER), e3 in element(ORDER)) {
        let id = RiordanElement::identity(ORDER);
        prop_assert_eq!(id.group_multiply(&e1).unwrap(), e1.clone());
        prop_assert_eq!(e1.group_multiply(&id).unwrap(), e1.clone());
        let inv = e1.group_inverse().unwrap();
        prop_assert_eq!(e1.group_multiply(&inv).unwrap(), id.clone());
        prop_assert_eq!(inv.group_multiply(&e1).unwrap(), id);
        let left = e1.group_multiply(&e2).unwrap().group_multiply(&e3).unwrap();
        let right = e1.group_multiply(&e2.group_multiply(&e3).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn action_compatibility(e1 in element(ORDER), e2 in element(ORDER), h in v_series(ORDER), k in v_series(ORDER)) {
        let nested = e1.act(&e2.act(&h).unwrap()).unwrap();
        let combined = e1.group_multiply(&e2).unwrap().act(&h).unwrap();
        prop_assert_eq!(&nested, &combined);
        prop_assert!(nested.coeff(0).is_zero());
        prop_assert_eq!(e1.act(&h.add(&k)).unwrap(), e1.act(&h).unwrap().add(&e1.act(&k).unwrap()));
        prop_assert_eq!(RiordanElement::identity(ORDER).act(&h).unwrap(), h);
    }

    #[test]
    fn representation_is_a_homomorphism(e1 in element(ORDER), e2 in element(ORDER)) {
        let m1 = e1.to_matrix(ORDER).unwrap().to_square_rows();
        let m2 = e2.to_matrix(ORDER).unwrap().to_square_rows();
        let product = e1.group_multiply(&e2).unwrap().to_matrix(ORDER).unwrap().to_square_rows();
        prop_assert_eq!(product, naive_matmul(&m1, &m2));
    }

    #[test]
    fn matrix_columns_are_the_action_on_monomials(e in element(ORDER)) {
        let m = e.to_matrix(ORDER).unwrap();
        for col in 1..=ORDER {
            let image = e.act(&TruncatedSeries::monomial(ORDER, col)).unwrap();
            for row in 1..=ORDER {
                prop_assert_eq!(m.entry(row, col), image.coeff(row).clone());
            }
        }
    }

    #[test]
    fn diagonal_is_geometric(e in element(ORDER)) {
        let ratio = riordan::coefficient::recip(e.g().coeff(1));
        let mut expected = e.f().coeff(0).clone();
        for d in e.to_matrix(ORDER).unwrap().diagonal() {
            expected *= &ratio;
            prop_assert_eq!(d, expected.clone());
        }
    }

    #[test]
    fn standard_pairs(p1 in standard_pair(ORDER), p2 in standard_pair(ORDER)) {
        prop_assert_eq!(p1.to_matrix(ORDER).unwrap().to_square_rows(), standard_columns(&p1, ORDER));
        let product = p1.fundamental_product(&p2).unwrap();
        prop_assert_eq!(
            product.to_matrix(ORDER).unwrap().to_square_rows(),
            naive_matmul(&standard_columns(&p1, ORDER), &standard_columns(&p2, ORDER))
        );
        prop_assert_eq!(
            product.to_element().unwrap(),
            p1.to_element().unwrap().group_multiply(&p2.to_element().unwrap()).unwrap()
        );
    }

    #[test]
    fn appell_closure(t1 in h_series(ORDER), t2 in h_series(ORDER)) {
        let a1 = AppellElement::new(t1.clone()).unwrap();
        let a2 = AppellElement::new(t2.clone()).unwrap();
        let m1 = a1.appell_matrix(ORDER + 1).unwrap();
        let m2 = a2.appell_matrix(ORDER + 1).unwrap();
        let expected = AppellElement::new(t1.multiply(&t2)).unwrap().appell_matrix(ORDER + 1).unwrap();
        prop_assert_eq!(m1.multiply(&m2).unwrap(), expected.clone());
        prop_assert_eq!(m2.multiply(&m1).unwrap(), expected);
    }

    #[test]
    fn appell_power_is_additive(t in h_series(ORDER), d1 in -3i64..=3, d2 in -3i64..=3) {
        let a = AppellElement::new(t).unwrap();
        let n = ORDER + 1;
        let lhs = a.appell_power(d1 + d2, n).unwrap();
        let rhs = naive_matmul(
            &a.appell_power(d1, n).unwrap().to_square_rows(),
            &a.appell_power(d2, n).unwrap().to_square_rows(),
        );
        prop_assert_eq!(lhs.to_square_rows(), rhs);
    }

    #[test]
    fn matrix_vector_product_matches_naive(e in element(6), v in prop::collection::vec(coefficient(), 6)) {
        let m = e.to_matrix(6).unwrap();
        prop_assert_eq!(m.mul_vector(&v).unwrap(), naive_matvec(&m.to_square_rows(), &v));
    }

    #[test]
    fn kenter_sum_equals_matrix_product(
        a in h_series(10), b in h_series(10), c in h_series(10), d in prop::sample::select(vec![-2i64, -1, 1, 2])
    ) {
        let t = KenterTriple::new(a.clone(), b.clone(), c.clone(), d).unwrap();
        let sum = riordan::kenter_sum(&t, 10).unwrap();
        prop_assert_eq!(&sum, &riordan::kenter_matrix_product(&t, 10).unwrap());
        // Independent route: dense Toeplitz power by repeated multiplication.
        let base = if d < 0 { b.reciprocal().unwrap() } else { b };
        let mut m = naive_identity(11);
        for _ in 0..d.unsigned_abs() {
            m = naive_matmul(&m, &naive_toeplitz(&base, 11));
        }
        let image = naive_matvec(&m, c.coefficients());
        let dot = a.coefficients().iter().zip(&image).fold(riordan::Coefficient::ZERO, |acc, (x, y)| acc + x * y);
        prop_assert_eq!(sum, dot);
    }

    #[test]
    fn json_round_trip(s in series(ORDER), e in element(5)) {
        prop_assert_eq!(TruncatedSeries::from_json(&s.to_json()).unwrap(), s);
        let m = e.to_matrix(5).unwrap();
        prop_assert_eq!(riordan::RiordanMatrixView::from_json(&m.to_json()).unwrap(), m);
    }
}
