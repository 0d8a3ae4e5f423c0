use symfield::{parse, parse_with, RatFunc, RatMatrix, SymError, Var};

fn p(s: &str) -> RatFunc {
    parse(s).unwrap()
}

#[test]
fn cancellation_to_zero() {
    let f = p("1/(1-T)");
    assert!(f.sub(&f).is_zero());
}

#[test]
fn identical_products_divide_to_one() {
    let f = p("(Q^2-A)*(Q^2-B)");
    assert!(f.div(&f).unwrap().is_one());
}

#[test]
fn bracket_collapses_to_symmetric_form() {
    let a0 = Var::new("A0").unwrap();
    let a1 = Var::new("A1").unwrap();
    let allowed = [a0, a1, Var::X, Var::Q];
    let lhs = parse_with("(A0 + A1*X + Q^-4*(Q^4-1)*A0*X^2 - Q^-4*A1*X^3 - Q^-4*A0*X^4) / (X*(1-Q^-4*X^2))", &allowed).unwrap();
    let rhs = parse_with("A0*(X + X^-1) + A1", &allowed).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn division_by_zero_is_an_error() {
    assert_eq!(p("A").div(&RatFunc::zero()), Err(SymError::DivisionByZero));
}

#[test]
fn substitution_examples() {
    let f = p("X + X^-1");
    assert_eq!(f.subst(&[(Var::X, p("X^-1"))]).unwrap(), f);
    let g = p("1 - A*T");
    assert!(g.subst(&[(Var::A, p("1")), (Var::T, p("1"))]).unwrap().is_zero());
    let l = p("1/((1-A*B*G*U*T)*(1-A*G*U*T)*(1-B*G*U*T)*(1-G*U*T))");
    let untwisted = p("1/((1-A*B*G*T)*(1-A*G*T)*(1-B*G*T)*(1-G*T))");
    assert_eq!(l.subst(&[(Var::U, RatFunc::one())]).unwrap(), untwisted);
}

#[test]
fn vanishing_denominator_under_substitution() {
    let f = p("1/(1-A*T)");
    assert_eq!(f.subst(&[(Var::A, p("T^-1"))]), Err(SymError::VanishingDenominator));
}

#[test]
fn resolvent_small_cases() {
    let x = RatFunc::var(Var::X);
    assert_eq!(RatMatrix::zeros(3, 3).geom_resolvent(&x).unwrap(), RatMatrix::identity(3));
    let c = RatMatrix::from_rows(vec![vec![p("A*Q")]]).unwrap();
    assert_eq!(*c.geom_resolvent(&x).unwrap().get(0, 0), p("1/(1-A*Q*X)"));
}

#[test]
fn resolvent_matches_truncated_series() {
    let m = RatMatrix::from_rows(vec![vec![p("A"), p("0")], vec![p("Q^2-1"), p("B")]]).unwrap();
    let x = RatFunc::var(Var::X);
    let r = m.geom_resolvent(&x).unwrap();
    let order = 12;
    let mut power = RatMatrix::identity(2);
    let mut coeffs = Vec::new();
    for _ in 0..=order {
        coeffs.push(power.clone());
        power = power.mul(&m).unwrap();
    }
    for i in 0..2 {
        for j in 0..2 {
            let t = r.get(i, j).taylor(Var::X, order).unwrap();
            for (l, c) in coeffs.iter().enumerate() {
                assert_eq!(t[l], *c.get(i, j), "entry ({i},{j}) degree {l}");
            }
        }
    }
}

#[test]
fn singular_resolvent_is_an_error() {
    let m = RatMatrix::from_rows(vec![vec![p("X^-1")]]).unwrap();
    assert_eq!(m.geom_resolvent(&RatFunc::var(Var::X)), Err(SymError::Singular));
}

#[test]
fn dimension_checks() {
    let a = RatMatrix::zeros(2, 3);
    assert!(matches!(a.mul(&a), Err(SymError::DimensionMismatch { .. })));
    assert!(matches!(a.geom_resolvent(&RatFunc::one()), Err(SymError::NotSquare(2, 3))));
    assert_eq!(RatMatrix::from_rows(vec![vec![p("1")], vec![]]), Err(SymError::Ragged));
}
