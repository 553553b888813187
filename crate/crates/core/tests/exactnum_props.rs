use proptest::prelude::*;
use twodist::exactnum::{
    certify_sign, format_rational, parse_rational, rat, ExactReal, HexC, Rational, Q33, Q5,
};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
}

fn q5() -> impl Strategy<Value = Q5> {
    (small_rat(), small_rat()).prop_map(|(a, b)| Q5::new(a, b))
}

fn q33() -> impl Strategy<Value = Q33> {
    (small_rat(), small_rat()).prop_map(|(a, b)| Q33::new(a, b))
}

fn hexc() -> impl Strategy<Value = HexC> {
    (small_rat(), small_rat(), small_rat(), small_rat())
        .prop_map(|(a, b, c, d)| HexC::new(a, b, c, d))
}

fn field_axioms<T: ExactReal>(x: &T, y: &T, z: &T) -> std::result::Result<(), TestCaseError> {
    prop_assert_eq!(x.add(y), y.add(x));
    prop_assert_eq!(x.mul(y), y.mul(x));
    prop_assert_eq!(x.add(y).add(z), x.add(&y.add(z)));
    prop_assert_eq!(x.mul(y).mul(z), x.mul(&y.mul(z)));
    prop_assert_eq!(x.mul(&y.add(z)), x.mul(y).add(&x.mul(z)));
    prop_assert_eq!(x.sub(x), T::zero());
    prop_assert_eq!(x.mul(&T::one()), x.clone());
    match x.checked_div(x) {
        Some(q) => prop_assert_eq!(q, T::one()),
        None => prop_assert_eq!(x, &T::zero()),
    }
    // order agrees with the sign of the difference and with the enclosure
    prop_assert_eq!(x < y, x.sub(y).signum() < 0);
    let iv = x.sub(y).approx(128);
    if let Some(s) = iv.sign() {
        prop_assert_eq!(s, x.sub(y).signum());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn q5_is_an_ordered_field(x in q5(), y in q5(), z in q5()) {
        field_axioms(&x, &y, &z)?;
    }

    #[test]
    fn q33_is_an_ordered_field(x in q33(), y in q33(), z in q33()) {
        field_axioms(&x, &y, &z)?;
    }

    #[test]
    fn hexc_is_a_commutative_ring(x in hexc(), y in hexc(), z in hexc()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).norm_sq(), &x.norm_sq() * &y.norm_sq());
        prop_assert_eq!(x.conj().conj(), x.clone());
    }

    #[test]
    fn hexc_norm_is_positive_definite(x in hexc()) {
        let n = x.norm_sq();
        prop_assert!(n.sign() >= 0);
        prop_assert_eq!(n.is_zero(), x.is_zero());
    }

    #[test]
    fn enclosures_shrink_and_contain(x in q5(), p in 0u32..5) {
        let lo = 64 << p;
        let coarse = x.approx(lo);
        let fine = x.approx(lo * 2);
        // both contain the true value, so they overlap, and the finer is no wider
        prop_assert!(fine.width() <= coarse.width());
        prop_assert!(coarse.lo() <= fine.hi() && fine.lo() <= coarse.hi());
        if x.is_rational() {
            prop_assert!(coarse.contains(x.rational_part()));
        }
    }

    #[test]
    fn certified_sign_is_exact_sign(x in q33()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(certify_sign("x", |p| Ok(x.approx(p))).unwrap(), x.sign());
    }

    #[test]
    fn rationals_round_trip_as_text(r in small_rat()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
}

#[test]
fn zero_cannot_be_certified() {
    let z = Q5::from_ints(0, 0);
    assert!(certify_sign("zero", |p| Ok(z.approx(p))).is_err());
}
