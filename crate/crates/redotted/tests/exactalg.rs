use proptest::prelude::*;
use redotted::exactalg::{
    elementary_symmetric, parse_poly, parse_ypoly, Field, Fp, Mono, Poly, QuotElem, YPoly, Q,
};

fn poly_from<F: Field>(terms: &[([u16; 3], i64)]) -> Poly<F> {
    terms.iter().fold(Poly::zero(3), |acc, (e, c)| {
        acc + Poly::term(Mono::from_exps(e), F::from_i64(*c))
    })
}

fn terms() -> impl Strategy<Value = Vec<([u16; 3], i64)>> {
    prop::collection::vec((prop::array::uniform3(0u16..3), -4i64..=4), 0..5)
}

#[test]
fn rationals_and_prime_fields() {
    let half = Q::from_ratio(1, 2).unwrap();
    assert_eq!(half.add(&half), Q::one());
    assert_eq!(Fp::<7>::from_i64(3).inv().unwrap(), Fp::<7>::from_i64(5));
    assert_eq!(Fp::<7>::from_i64(-1), Fp::<7>::from_i64(6));
    assert_eq!(Q::parse_scalar("-3/6"), Q::from_ratio(-1, 2));
}

#[test]
fn elementary_symmetric_polynomials() {
    let e2 = elementary_symmetric::<Q>(3, 2, &[1, 2, 3]).unwrap();
    assert_eq!(e2, parse_poly::<Q>("x1*x2 + x1*x3 + x2*x3", 3).unwrap());
    assert_eq!(e2.swap_vars(1, 3), e2);
}

#[test]
fn canonical_text_examples() {
    let p = parse_poly::<Q>("3*x1^2*x2 - x3 + 1/2", 3).unwrap();
    assert_eq!(parse_poly::<Q>(&p.to_text(), 3).unwrap(), p);
    let y = parse_ypoly::<Q>("y^2 - x1*y", 2).unwrap();
    assert_eq!(y.degree_y(), Some(2));
    assert!(parse_poly::<Q>("x4", 3).is_err());
    assert!(parse_poly::<Q>("x1 +", 3).is_err());
}

#[test]
fn quotient_modules_reduce_modulo_the_product() {
    // V_{2,3} = R[y]/((y - x1)(y - x2)): y^2 reduces to (x1 + x2) y - x1 x2.
    let y2 = YPoly::<Q>::y(2).mul(&YPoly::y(2));
    let v = QuotElem::new(&y2, 3).unwrap();
    let want = parse_ypoly::<Q>("(x1 + x2)*y - x1*x2", 2).unwrap();
    assert_eq!(*v.rep(), want);
}

proptest! {
    #[test]
    fn polynomial_ring_axioms(a in terms(), b in terms(), c in terms()) {
        let (a, b, c) = (poly_from::<Q>(&a), poly_from::<Q>(&b), poly_from::<Q>(&c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_round_trips(a in terms()) {
        let p = poly_from::<Q>(&a);
        prop_assert_eq!(parse_poly::<Q>(&p.to_text(), 3).unwrap(), p);
        let f = poly_from::<Fp<101>>(&a);
        prop_assert_eq!(parse_poly::<Fp<101>>(&f.to_text(), 3).unwrap(), f);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in terms(), b in terms()) {
        let (a, b) = (poly_from::<Q>(&a), poly_from::<Q>(&b));
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn monic_division_recovers_dividend(a in terms(), k in 1usize..3) {
        let num = YPoly::monomial(poly_from::<Q>(&a), 2).add(&YPoly::y(3));
        let d = (1..=k).fold(YPoly::one(3), |acc, l| acc.mul(&YPoly::linear(3, l)));
        let (q, r) = num.divrem_monic(&d);
        prop_assert_eq!(q.mul(&d).add(&r), num);
        prop_assert!(r.degree_y().is_none_or(|e| e < k));
    }
}
