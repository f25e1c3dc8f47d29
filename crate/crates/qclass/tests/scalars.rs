use proptest::prelude::*;
use qclass::scalars::{
    format_scalar, parse_scalar, q_integer, Field, GaussRat, Poly, QField, Qq, Qq1, RatFunc,
    ScalarError,
};

fn q() -> Qq {
    Qq::q()
}

fn qp(k: i64) -> Qq {
    Qq::q_pow(k)
}

fn int(v: i64) -> Qq {
    Qq::from_int(v)
}

#[test]
fn normalize_cancels_common_factor() {
    let num = Poly::from_coeffs(vec![GaussRat::from_int(-1), GaussRat::zero(), GaussRat::one()]);
    let den = Poly::from_coeffs(vec![GaussRat::from_int(-1), GaussRat::one()]);
    let s = Qq::from_parts(num, den, 0).unwrap();
    assert_eq!(s, q().add(&int(1)));
}

#[test]
fn imaginary_unit_squares_to_minus_one() {
    let i = Qq::imag();
    assert_eq!(i.mul(&i), int(-1));
}

#[test]
fn q_difference_quotient_reduces() {
    let a = q().sub(&qp(-1));
    let b = qp(2).sub(&qp(-2));
    assert_eq!(a.div(&b), int(1).div(&q().add(&qp(-1))));
}

#[test]
fn zero_denominator_is_rejected() {
    let r = Qq::from_parts(Poly::one(), Poly::zero(), 0);
    assert!(matches!(r, Err(ScalarError::Malformed(_))));
}

#[test]
fn classical_limit_examples() {
    assert_eq!(q().add(&qp(-1)).classical_limit().unwrap(), GaussRat::from_int(2));
    for p in 1..5 {
        assert_eq!(qp(-2 * p).neg().classical_limit().unwrap(), GaussRat::from_int(-1));
    }
    let s = q().sub(&int(1)).div(&q().add(&int(1)));
    assert!(s.classical_limit().unwrap().is_zero());
    let pole = int(1).div(&q().sub(&int(1)));
    assert_eq!(pole.classical_limit(), Err(ScalarError::PoleAtOne));
}

#[test]
fn h_derivative_examples() {
    assert_eq!(q().h_derivative().unwrap(), GaussRat::from_int(1));
    assert_eq!(q().sub(&qp(-1)).h_derivative().unwrap(), GaussRat::from_int(2));
    assert_eq!(qp(-1).h_derivative().unwrap(), GaussRat::from_int(-1));
    assert_eq!(int(1).h_derivative().unwrap(), GaussRat::zero());
}

#[test]
fn q_integers() {
    assert_eq!(q_integer::<Qq>(1), int(1));
    assert_eq!(q_integer::<Qq>(2), q().add(&qp(-1)));
    assert_eq!(q_integer::<Qq>(-2), q().add(&qp(-1)).neg());
}

#[test]
fn text_form_is_stable() {
    let s = q().add(&qp(-1)).div(&q().sub(&int(2)));
    let t = format_scalar(&s, &["q"]);
    assert_eq!(t, "((1+0i)*q^1+(1+0i)*q^-1)/((1+0i)*q^1+(-2+0i))");
    assert_eq!(parse_scalar::<Qq>(&t, &["q"]).unwrap(), s);
    assert_eq!(format_scalar(&Qq::zero(), &["q"]), "(0)/((1+0i))");
    let i = Qq::imag().mul(&qp(-3));
    assert_eq!(format_scalar(&i, &["q"]), "((0+1i)*q^-3)/((1+0i))");
}

#[test]
fn nested_text_round_trip() {
    let z = Qq1::var(1);
    let qq = Qq1::q();
    let s = z.mul(&qq).add(&Qq1::from_int(3).div(&z.add(&Qq1::one())));
    let s = s.div(&qq.sub(&z));
    let t = format_scalar(&s, &["q", "z1"]);
    assert_eq!(parse_scalar::<Qq1>(&t, &["q", "z1"]).unwrap(), s);
}

#[test]
fn parse_rejects_garbage() {
    assert!(parse_scalar::<Qq>("(1)/(1)", &["q"]).is_err());
    assert!(parse_scalar::<Qq>("((1+0i)*w^1)/((1+0i))", &["q"]).is_err());
    assert!(parse_scalar::<Qq>("((1+0i))/(0)", &["q"]).is_err());
}

fn small_gauss() -> impl Strategy<Value = GaussRat> {
    (-4i64..5, 1i64..4, -3i64..4).prop_map(|(a, b, c)| {
        GaussRat::from_frac(a, b).add(&GaussRat::i().mul(&GaussRat::from_int(c)))
    })
}

fn laurent() -> impl Strategy<Value = Qq> {
    (prop::collection::vec(small_gauss(), 1..4), -3i64..3)
        .prop_map(|(c, s)| Qq::laurent(Poly::from_coeffs(c), s))
}

fn scalar() -> impl Strategy<Value = Qq> {
    (laurent(), laurent()).prop_map(|(a, b)| if b.is_zero() { a } else { a.div(&b) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Qq::one());
        }
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let t = format_scalar(&a, &["q"]);
        prop_assert_eq!(parse_scalar::<Qq>(&t, &["q"]).unwrap(), a);
    }

    #[test]
    fn normalize_is_idempotent(a in scalar()) {
        let again = Qq::from_parts(a.numerator().clone(), a.denominator().clone(), a.shift()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn limits_are_linear_and_multiplicative(a in laurent(), b in laurent()) {
        let la = a.classical_limit().unwrap();
        let lb = b.classical_limit().unwrap();
        prop_assert_eq!(a.add(&b).classical_limit().unwrap(), la.add(&lb));
        prop_assert_eq!(a.mul(&b).classical_limit().unwrap(), la.mul(&lb));
        let da = a.h_derivative().unwrap();
        let db = b.h_derivative().unwrap();
        prop_assert_eq!(a.add(&b).h_derivative().unwrap(), da.add(&db));
        prop_assert_eq!(a.mul(&b).h_derivative().unwrap(), da.mul(&lb).add(&la.mul(&db)));
    }
}

#[test]
fn nested_field_arithmetic() {
    let t = Qq1::var(1);
    let s = Qq1::q().mul(&t).add(&t.inv().unwrap().mul(&Qq1::q_pow(-1)));
    assert!(!s.depends_on_q_only());
    let w = s.div(&t.add(&Qq1::imag()));
    assert_eq!(w.mul(&t.add(&Qq1::imag())), s);
    let r: RatFunc<GaussRat> = Qq::q_pow(3);
    assert!(r.depends_on_q_only());
}
