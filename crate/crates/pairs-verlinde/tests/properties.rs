//! Randomized algebraic laws for the series and cohomology arithmetic.

use proptest::prelude::*;

use pairs_verlinde::poly::Polynomial;
use pairs_verlinde::rat::rat_i64;
use pairs_verlinde::ratfun::RationalLaurent;
use pairs_verlinde::symprod::{class_mul, CohClass};

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-9i64..=9, 1..6).prop_map(|v| Polynomial::from_i64(&v))
}

fn unit_poly() -> impl Strategy<Value = Polynomial> {
    // nonzero constant term, so the series inverse exists
    (prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), prop::collection::vec(-9i64..=9, 0..5))
        .prop_map(|(c0, rest)| {
            let mut v = vec![c0];
            v.extend(rest);
            Polynomial::from_i64(&v)
        })
}

fn one_class(g: i64, i: i64) -> impl Strategy<Value = CohClass> {
    (prop::collection::vec(-5i64..=5, 1..4), prop::collection::vec(-5i64..=5, 0..3))
        .prop_map(move |(p0, p1)| {
            CohClass::from_eta_poly(&Polynomial::from_i64(&p0), g, i)
                .with_sigma_entry(1, &Polynomial::from_i64(&p1))
        })
}

fn class_pair() -> impl Strategy<Value = (CohClass, CohClass)> {
    (2i64..=3, 1i64..=4).prop_flat_map(|(g, i)| (one_class(g, i), one_class(g, i)))
}

fn class_triple() -> impl Strategy<Value = (CohClass, CohClass, CohClass)> {
    (2i64..=3, 1i64..=4)
        .prop_flat_map(|(g, i)| (one_class(g, i), one_class(g, i), one_class(g, i)))
}

proptest! {
    #[test]
    fn series_pow_exponents_add(p in unit_poly(), a in -4i64..=4, b in -4i64..=4) {
        let deg = 8usize;
        let lhs = p.series_pow(a + b, deg).unwrap();
        let rhs = p.series_pow(a, deg).unwrap().mul_trunc(&p.series_pow(b, deg).unwrap(), deg);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_inverse_is_inverse(p in unit_poly()) {
        let deg = 8usize;
        let inv = p.series_inv(deg).unwrap();
        let prod = p.mul_trunc(&inv, deg);
        prop_assert_eq!(prod.coeff(0), rat_i64(1));
        for k in 1..=deg {
            prop_assert_eq!(prod.coeff(k), rat_i64(0));
        }
    }

    #[test]
    fn reciprocal_substitution_involutes(num in small_poly(), den in unit_poly(), shift in -3i64..=3) {
        prop_assume!(!num.is_zero());
        let r = RationalLaurent::new(shift, num, den).unwrap();
        prop_assert_eq!(r.subst_reciprocal().subst_reciprocal(), r);
    }

    #[test]
    fn rational_arithmetic_distributes(a in small_poly(), b in small_poly(), den in unit_poly()) {
        let x = RationalLaurent::new(0, a, den.clone()).unwrap();
        let y = RationalLaurent::new(0, b, den).unwrap();
        let lhs = &(&x + &y) * &x;
        let rhs = &(&x * &x) + &(&y * &x);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn class_mul_commutes((a, b) in class_pair()) {
        prop_assert_eq!(class_mul(&a, &b), class_mul(&b, &a));
    }

    #[test]
    fn class_mul_associates((a, b, c) in class_triple()) {
        let lhs = class_mul(&class_mul(&a, &b), &c);
        let rhs = class_mul(&a, &class_mul(&b, &c));
        prop_assert_eq!(lhs, rhs);
    }
}
