use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use symfield::{Poly, RatFunc, RatMatrix, SymError, Var};

const VARS: [Var; 3] = [Var::A, Var::X, Var::Q];

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, -1i32..=2, 0i32..=2, -1i32..=1), 1..=max_terms).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, ea, ex, eq)| {
            acc.add(&Poly::monomial(&[(Var::A, ea), (Var::X, ex), (Var::Q, eq)], BigInt::from(c)))
        })
    })
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (poly_strategy(3), poly_strategy(2)).prop_filter_map("nonzero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc_strategy().prop_filter("nonzero", |f| !f.is_zero())
}

fn point_strategy() -> impl Strategy<Value = Vec<(Var, RatFunc)>> {
    prop::collection::vec((1i64..=9, 1i64..=7), 3).prop_map(|v| {
        VARS.iter().zip(v).map(|(x, (n, d))| (*x, RatFunc::frac(n + 7 * d, d))).collect()
    })
}

fn at(f: &RatFunc, pt: &[(Var, RatFunc)]) -> Result<BigRational, SymError> {
    Ok(f.subst(pt)?.as_rational().expect("all variables bound"))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(f in ratfunc_strategy(), g in ratfunc_strategy(), h in nonzero_ratfunc()) {
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert!(h.mul(&h.inv().unwrap()).is_one());
        prop_assert!(f.sub(&f).is_zero());
        prop_assert_eq!(f.mul(&h).div(&h).unwrap(), f);
    }

    #[test]
    fn substitution_is_a_homomorphism(f in ratfunc_strategy(), g in ratfunc_strategy(), pt in point_strategy()) {
        // Points with all coordinates > 1 can still hit a pole; skip those.
        if let (Ok(a), Ok(b)) = (at(&f, &pt), at(&g, &pt)) {
            prop_assert_eq!(at(&f.mul(&g), &pt).unwrap(), &a * &b);
            prop_assert_eq!(at(&f.add(&g), &pt).unwrap(), &a + &b);
        }
    }

    #[test]
    fn resolvent_inverts(entries in prop::collection::vec(poly_strategy(2), 4)) {
        let rows: Vec<Vec<RatFunc>> = entries.chunks(2).map(|r| r.iter().cloned().map(RatFunc::from_poly).collect()).collect();
        let m = RatMatrix::from_rows(rows).unwrap();
        let x = RatFunc::var(Var::T);
        let r = m.geom_resolvent(&x).unwrap();
        let lhs = RatMatrix::identity(2).sub(&m.scale(&x)).unwrap();
        prop_assert_eq!(r.mul(&lhs).unwrap(), RatMatrix::identity(2));
        prop_assert_eq!(lhs.mul(&r).unwrap(), RatMatrix::identity(2));
    }

    #[test]
    fn factored_equals_expanded(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(2)) {
        prop_assume!(!c.is_zero());
        let factored = RatFunc::from_poly(a.clone()).mul(&RatFunc::from_poly(b.clone())).div(&RatFunc::from_poly(c.clone())).unwrap();
        let expanded = RatFunc::new(a.mul(&b), c.clone()).unwrap();
        prop_assert_eq!(&factored, &expanded);
        let again = symfield::parse(&factored.to_text()).unwrap();
        prop_assert_eq!(again, expanded);
    }
}
