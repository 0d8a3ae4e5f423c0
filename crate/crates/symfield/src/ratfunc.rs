use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gcd::gcd;
use crate::poly::Poly;
use crate::var::Var;
use crate::SymError;

/// Exact rational function `num/den` in Laurent variables over Q.
///
/// Canonical form: `den` is a polynomial divisible by no variable, with
/// positive leading coefficient; `num` and `den` are coprime as polynomials and
/// their integer contents are coprime. Equal functions are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

// Normalize integer contents and sign; `num`, `den` already coprime.
fn fix_content(mut num: Poly, mut den: Poly) -> RatFunc {
    let k = num.content().gcd(&den.content());
    if !k.is_one() {
        num = num.div_integer(&k);
        den = den.div_integer(&k);
    }
    if den.lc().is_negative() {
        num = num.neg();
        den = den.neg();
    }
    RatFunc { num, den }
}

fn exact(a: &Poly, b: &Poly) -> Poly {
    if b.is_one() {
        return a.clone();
    }
    a.exact_div(b).expect("gcd divides exactly")
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn int(k: i64) -> RatFunc {
        RatFunc::from_poly(Poly::constant(k))
    }

    pub fn frac(n: i64, d: i64) -> RatFunc {
        RatFunc::new(Poly::constant(n), Poly::constant(d)).expect("nonzero denominator")
    }

    pub fn from_rational(r: &BigRational) -> RatFunc {
        fix_content(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    /// Laurent monomial `Π v^e`.
    pub fn mono(powers: &[(Var, i32)]) -> RatFunc {
        RatFunc::from_poly(Poly::monomial(powers, BigInt::one()))
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    /// Build `num/den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, SymError> {
        if den.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        Ok(RatFunc::canon(num, den))
    }

    fn canon(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (dv, dm, dp) = den.strip_monomial();
        let neg: Vec<i32> = dm.iter().map(|x| -x).collect();
        let num = num.shift(&dv, &neg);
        let g = gcd(&num, &dp);
        fix_content(exact(&num, &g), exact(&dp, &g))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Variables occurring in numerator or denominator, sorted.
    pub fn vars(&self) -> Vec<Var> {
        let mut v: Vec<Var> = self.num.vars().iter().chain(self.den.vars()).copied().collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFunc::canon(self.num.add(&other.num), self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if num.is_zero() {
                return RatFunc::zero();
            }
            return fix_content(num, self.den.mul(&other.den));
        }
        let ad = exact(&self.den, &g);
        let bd = exact(&other.den, &g);
        let t = self.num.mul(&bd).add(&other.num.mul(&ad));
        if t.is_zero() {
            return RatFunc::zero();
        }
        let h = gcd(&t, &g);
        fix_content(exact(&t, &h), exact(&g, &h).mul(&ad).mul(&bd))
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let num = exact(&self.num, &g1).mul(&exact(&other.num, &g2));
        let den = exact(&self.den, &g2).mul(&exact(&other.den, &g1));
        fix_content(num, den)
    }

    pub fn inv(&self) -> Result<RatFunc, SymError> {
        if self.is_zero() {
            return Err(SymError::DivisionByZero);
        }
        let (nv, nm, np) = self.num.strip_monomial();
        let neg: Vec<i32> = nm.iter().map(|x| -x).collect();
        Ok(fix_content(self.den.shift(&nv, &neg), np))
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, SymError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<RatFunc, SymError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k = k as u32;
        Ok(RatFunc { num: self.num.pow(k), den: self.den.pow(k) })
    }

    /// Multiply by a rational constant.
    pub fn scale(&self, r: &BigRational) -> RatFunc {
        self.mul(&RatFunc::from_rational(r))
    }

    /// Ring homomorphism `v ↦ bindings[v]`; unbound variables are kept.
    pub fn subst(&self, bindings: &[(Var, RatFunc)]) -> Result<RatFunc, SymError> {
        let table: HashMap<Var, &RatFunc> = bindings.iter().map(|(v, f)| (*v, f)).collect();
        let den = subst_poly(&self.den, &table)?;
        if den.is_zero() {
            return Err(SymError::VanishingDenominator);
        }
        let num = subst_poly(&self.num, &table)?;
        num.div(&den)
    }

    /// Floating-point evaluation; `None` if a variable is unbound.
    pub fn eval_f64(&self, value: &dyn Fn(Var) -> Option<f64>) -> Option<f64> {
        Some(self.num.eval_f64(value)? / self.den.eval_f64(value)?)
    }

    /// Taylor coefficients at `x = 0` up to degree `order` (inclusive).
    pub fn taylor(&self, x: Var, order: usize) -> Result<Vec<RatFunc>, SymError> {
        let (lo, ns) = self.num.coeffs_in(x);
        if lo < 0 {
            return Err(SymError::NotPowerSeries(x));
        }
        let (_, ds) = self.den.coeffs_in(x);
        let d0 = RatFunc::from_poly(ds[0].clone());
        let d0i = d0.inv()?;
        let coef = |v: &Vec<Poly>, k: i64| -> RatFunc {
            if k < 0 || k as usize >= v.len() {
                RatFunc::zero()
            } else {
                RatFunc::from_poly(v[k as usize].clone())
            }
        };
        let mut out: Vec<RatFunc> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = coef(&ns, k as i64 - lo as i64);
            for i in 1..=k.min(ds.len() - 1) {
                acc = acc.sub(&RatFunc::from_poly(ds[i].clone()).mul(&out[k - i]));
            }
            out.push(acc.mul(&d0i));
        }
        Ok(out)
    }

    /// Deterministic text: `num` or `(num)/(den)`.
    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            self.num.to_text()
        } else {
            format!("({})/({})", self.num.to_text(), self.den.to_text())
        }
    }
}

// Substitute into a polynomial, clearing the binding denominators at once so
// only one canonicalization is needed.
fn subst_poly(p: &Poly, table: &HashMap<Var, &RatFunc>) -> Result<RatFunc, SymError> {
    let vars = p.vars();
    let bound: Vec<usize> = (0..vars.len()).filter(|i| table.contains_key(&vars[*i])).collect();
    if bound.is_empty() {
        return Ok(RatFunc::from_poly(p.clone()));
    }
    struct Slot {
        lo_pad: i32,
        hi_pad: i32,
        npow: Vec<Poly>,
        dpow: Vec<Poly>,
    }
    let mut slots: Vec<Slot> = Vec::new();
    let mut common = Poly::one();
    for &i in &bound {
        let f = table[&vars[i]];
        let (lo, hi) = p.degree_range(vars[i]);
        let lo_pad = (-lo).max(0);
        let hi_pad = hi.max(0);
        if lo < 0 && f.is_zero() {
            return Err(SymError::VanishingDenominator);
        }
        let span = (hi_pad + lo_pad) as usize;
        let mut npow = vec![Poly::one()];
        let mut dpow = vec![Poly::one()];
        for k in 1..=span {
            npow.push(npow[k - 1].mul(&f.num));
            dpow.push(dpow[k - 1].mul(&f.den));
        }
        // Π (n/d)^e = [n^{e+lo_pad} d^{hi_pad-e}] / [n^{lo_pad} d^{hi_pad}]
        common = common.mul(&dpow[hi_pad as usize]).mul(&npow[lo_pad as usize]);
        slots.push(Slot { lo_pad, hi_pad, npow, dpow });
    }
    let free: Vec<usize> = (0..vars.len()).filter(|i| !table.contains_key(&vars[*i])).collect();
    let free_vars: Vec<Var> = free.iter().map(|i| vars[*i]).collect();
    let mut total = Poly::zero();
    for (e, c) in p.terms() {
        let mut t = Poly::constant(c.clone());
        let fe: Vec<i32> = free.iter().map(|i| e[*i]).collect();
        t = t.shift(&free_vars, &fe);
        for (s, &i) in slots.iter().zip(bound.iter()) {
            let k = e[i];
            t = t.mul(&s.npow[(k + s.lo_pad) as usize]).mul(&s.dpow[(s.hi_pad - k) as usize]);
        }
        total = total.add(&t);
    }
    RatFunc::new(total, common)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.to_text())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(k: i64) -> Self {
        RatFunc::int(k)
    }
}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$m(self, rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$m(&self, &rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$m(&self, rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$m(self, &rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(v: Var) -> RatFunc {
        RatFunc::var(v)
    }

    #[test]
    fn cancellation_to_zero() {
        let f = RatFunc::one().div(&(RatFunc::one() - x(Var::T))).unwrap();
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn identity_quotient() {
        let q = x(Var::Q).pow(2).unwrap();
        let p = (&q - x(Var::A)) * (&q - x(Var::B));
        assert!(p.div(&p).unwrap().is_one());
    }

    #[test]
    fn factored_equals_expanded() {
        let a = (x(Var::A) + RatFunc::int(1)) * (x(Var::A) - RatFunc::int(1));
        let b = x(Var::A).pow(2).unwrap() - RatFunc::int(1);
        assert_eq!(a, b);
        let c = RatFunc::one().div(&(x(Var::A) - RatFunc::int(1))).unwrap()
            - RatFunc::one().div(&(x(Var::A) + RatFunc::int(1))).unwrap();
        let d = RatFunc::int(2).div(&b).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn canonical_sign_and_content() {
        let f = RatFunc::new(Poly::constant(-6), Poly::var(Var::X).scale(&BigInt::from(-4))).unwrap();
        assert_eq!(f.to_text(), "(3*X^-1)/(2)");
        assert_eq!(f, RatFunc::frac(3, 2).mul(&RatFunc::mono(&[(Var::X, -1)])));
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(RatFunc::one().div(&RatFunc::zero()), Err(SymError::DivisionByZero));
    }

    #[test]
    fn subst_symmetric_function() {
        let f = x(Var::X) + RatFunc::mono(&[(Var::X, -1)]);
        let g = f.subst(&[(Var::X, RatFunc::mono(&[(Var::X, -1)]))]).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn subst_to_zero() {
        let f = RatFunc::one() - x(Var::A) * x(Var::T);
        let g = f.subst(&[(Var::A, RatFunc::one()), (Var::T, RatFunc::one())]).unwrap();
        assert!(g.is_zero());
        let h = RatFunc::one().div(&f).unwrap();
        assert_eq!(
            h.subst(&[(Var::A, RatFunc::one()), (Var::T, RatFunc::one())]),
            Err(SymError::VanishingDenominator)
        );
    }

    #[test]
    fn taylor_of_geometric_series() {
        let f = RatFunc::one().div(&(RatFunc::one() - x(Var::A) * x(Var::X))).unwrap();
        let cs = f.taylor(Var::X, 4).unwrap();
        for (k, c) in cs.iter().enumerate() {
            assert_eq!(*c, x(Var::A).pow(k as i32).unwrap());
        }
    }
}
