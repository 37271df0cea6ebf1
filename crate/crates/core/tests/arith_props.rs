use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use linksgould::arith::{Laurent, LGScalar, MultiPoly, RatFunc, ZJ};

fn zj() -> impl Strategy<Value = ZJ> {
    (-6i64..=6, -3i64..=3).prop_map(|(u, v)| ZJ::new(BigInt::from(u), BigInt::from(v)))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), zj()), 0..5)
        .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|((i, j, k), c)| ([i, j, k], c))))
}

fn int_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -6i64..=6), 0..5)
        .prop_map(|ts| MultiPoly::from_terms(ts.into_iter().map(|((i, j, k), c)| ([i, j, k], ZJ::from_i64(c)))))
}

fn nonzero_poly() -> impl Strategy<Value = MultiPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec(((-3i32..=3, -3i32..=3), -5i64..=5), 0..5)
        .prop_map(|ts| Laurent::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_ring_axioms(x in poly(), y in poly(), z in poly()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn poly_text_round_trip(x in poly()) {
        prop_assert_eq!(MultiPoly::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn exact_division(x in poly(), d in nonzero_poly()) {
        let p = &x * &d;
        prop_assert_eq!(p.div_exact(&d), Some(x));
    }

    #[test]
    fn ratfunc_field_axioms(a in poly(), b in nonzero_poly(), c in poly(), d in nonzero_poly()) {
        let x = RatFunc::new(a, b).unwrap();
        let y = RatFunc::new(c, d).unwrap();
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &y, &y * &x);
        if !y.is_zero() {
            prop_assert_eq!((&x * &y).div(&y).unwrap(), x);
        }
    }

    #[test]
    fn specialization_is_a_ring_map(x in int_poly(), y in int_poly(), v in prop::array::uniform3(-5i64..=5)) {
        let pt = v.map(|t| BigRational::from_integer(t.into()));
        let lhs = (&x * &y).eval_q(&pt);
        let rhs = &x.eval_q(&pt) * &y.eval_q(&pt);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn laurent_ring_and_text(x in laurent(), y in laurent()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(Laurent::parse(&x.to_string()).unwrap(), x.clone());
        prop_assert_eq!(LGScalar::parse(&x.to_scalar().to_string()).unwrap(), x.to_scalar());
    }

    #[test]
    fn y_squares_to_its_polynomial(x in laurent()) {
        let y = LGScalar::y();
        let yy = &y * &y;
        prop_assert!(yy == LGScalar::from_half(linksgould::arith::y_squared()));
        let s = x.to_scalar();
        prop_assert_eq!(&(&s * &y) * &y, &s * &yy);
    }
}

#[test]
fn display_formats() {
    assert_eq!(MultiPoly::parse("c*a^2 + 3*b - 1").unwrap().to_string(), MultiPoly::parse("a^2*c+3*b-1").unwrap().to_string());
    let l = Laurent::parse("t0^-1*t1 + 2").unwrap();
    assert_eq!(l.to_string(), "t0^-1*t1 + 2");
    let f = RatFunc::new(MultiPoly::parse("a^2 - b^2").unwrap(), MultiPoly::parse("a - b").unwrap()).unwrap();
    assert_eq!(f.to_string(), "a + b");
}
