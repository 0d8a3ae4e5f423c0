//! Numeric specialization of symbolic values: complex evaluation, and exact
//! evaluation in the real quadratic field `Q(√p)` at `Q = √p`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use symfield::{Poly, RatFunc, Var};

use crate::{Gsp4Error, Result};

/// Numeric values for variables.
pub type Env = [(Var, Complex64)];

fn lookup(env: &Env, v: Var) -> Result<Complex64> {
    env.iter().find(|(w, _)| *w == v).map(|(_, z)| *z).ok_or(Gsp4Error::Unbound(v))
}

fn eval_poly(p: &Poly, env: &Env) -> Result<Complex64> {
    let vals = p.vars().iter().map(|v| lookup(env, *v)).collect::<Result<Vec<_>>>()?;
    let mut acc = Complex64::zero();
    for (e, c) in p.terms() {
        let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        for (x, k) in vals.iter().zip(e.iter()) {
            t *= x.powi(*k);
        }
        acc += t;
    }
    Ok(acc)
}

/// Evaluate `f` at complex values; a vanishing denominator is a pole.
pub fn eval_complex(f: &RatFunc, env: &Env) -> Result<Complex64> {
    let den = eval_poly(f.den(), env)?;
    if den.norm() < 1e-300 {
        return Err(Gsp4Error::Pole(format!("denominator of {f} vanishes")));
    }
    Ok(eval_poly(f.num(), env)? / den)
}

/// `x + y·√p` with rational `x, y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    pub p: u64,
    pub x: BigRational,
    pub y: BigRational,
}

impl QuadSurd {
    pub fn to_f64(&self) -> f64 {
        self.x.to_f64().unwrap_or(f64::NAN) + self.y.to_f64().unwrap_or(f64::NAN) * (self.p as f64).sqrt()
    }
}

// A polynomial in `Q` alone, evaluated at `Q = √p` as `x + y√p`.
fn surd_of_poly(poly: &Poly, p: u64) -> Result<(BigRational, BigRational)> {
    let mut x = BigRational::zero();
    let mut y = BigRational::zero();
    let pr = BigRational::from_integer(BigInt::from(p));
    for (e, c) in poly.terms() {
        let k = match poly.vars() {
            [] => 0,
            [v] if *v == Var::Q => e[0],
            _ => {
                let other = poly.vars().iter().copied().find(|v| *v != Var::Q).unwrap_or(Var::Q);
                return Err(Gsp4Error::Unbound(other));
            }
        };
        // Q^k = p^{⌊k/2⌋} · (√p)^{k mod 2}
        let half = k.div_euclid(2);
        let term = BigRational::from_integer(c.clone()) * num_traits::pow::Pow::pow(&pr, half);
        if k.rem_euclid(2) == 0 {
            x += term;
        } else {
            y += term;
        }
    }
    Ok((x, y))
}

/// Exact value of a function of `Q` alone at `Q = √p`, in `Q(√p)`.
pub fn eval_at_sqrt(f: &RatFunc, p: u64) -> Result<QuadSurd> {
    let (nx, ny) = surd_of_poly(f.num(), p)?;
    let (dx, dy) = surd_of_poly(f.den(), p)?;
    let pr = BigRational::from_integer(BigInt::from(p));
    let norm = &dx * &dx - &pr * &dy * &dy;
    if norm.is_zero() {
        return Err(Gsp4Error::Pole(format!("denominator of {f} vanishes at Q = √{p}")));
    }
    // (nx + ny√p)(dx − dy√p) / (dx² − p·dy²)
    let x = (&nx * &dx - &pr * &ny * &dy) / &norm;
    let y = (&ny * &dx - &nx * &dy) / &norm;
    Ok(QuadSurd { p, x, y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use symfield::{parse, q, qh};

    #[test]
    fn complex_evaluation() {
        let f = parse("(1 + A*T)/(1 - A)").unwrap();
        let env = [(Var::A, Complex64::i()), (Var::T, Complex64::new(2.0, 0.0))];
        let v = eval_complex(&f, &env).unwrap();
        let expect = (Complex64::new(1.0, 0.0) + Complex64::i() * 2.0) / (Complex64::new(1.0, 0.0) - Complex64::i());
        assert!((v - expect).norm() < 1e-14);
        assert!(matches!(eval_complex(&f, &env[..1]), Err(Gsp4Error::Unbound(Var::T))));
        let pole = [(Var::A, Complex64::new(1.0, 0.0)), (Var::T, Complex64::new(0.0, 0.0))];
        assert!(matches!(eval_complex(&f, &pole), Err(Gsp4Error::Pole(_))));
    }

    #[test]
    fn surd_arithmetic() {
        // 1/(Q − 1) at Q = √3 is (√3 + 1)/2.
        let f = (qh(1) - RatFunc::one()).inv().unwrap();
        let s = eval_at_sqrt(&f, 3).unwrap();
        assert_eq!(s.x, BigRational::new(1.into(), 2.into()));
        assert_eq!(s.y, BigRational::new(1.into(), 2.into()));
        // Q^{-3} = √3/9, q = 3.
        let g = qh(-3) + q();
        let s = eval_at_sqrt(&g, 3).unwrap();
        assert_eq!(s.x, BigRational::from_integer(3.into()));
        assert_eq!(s.y, BigRational::new(1.into(), 9.into()));
        assert!(eval_at_sqrt(&parse("Q*A").unwrap(), 3).is_err());
    }
}
