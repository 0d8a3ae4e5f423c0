//! Multivariate gcd over Z by recursive content extraction and the
//! subresultant polynomial remainder sequence.
//!
//! Monomials are units in the Laurent ring, so every gcd returned here is a
//! genuine polynomial that no variable divides, with content 1 and a positive
//! leading coefficient.

use crate::poly::Poly;
use crate::var::Var;

/// Strip monomial factors and integer content.
pub fn normalize(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    p.strip_monomial().2.primitive()
}

/// Normalized gcd of two Laurent polynomials (see module docs).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    pgcd(&normalize(a), &normalize(b))
}

/// Gcd of a list, stopping early once it reaches 1.
pub fn gcd_list<'a>(items: impl IntoIterator<Item = &'a Poly>) -> Poly {
    let mut acc = Poly::zero();
    for p in items {
        if p.is_zero() {
            continue;
        }
        acc = if acc.is_zero() { normalize(p) } else { pgcd(&acc, &normalize(p)) };
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn content_wrt(p: &Poly, x: Var) -> Poly {
    let (_, cs) = p.coeffs_in(x);
    gcd_list(cs.iter())
}

// Both arguments normalized and nonzero.
fn pgcd(a: &Poly, b: &Poly) -> Poly {
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    let (small, big) = if a.nterms() <= b.nterms() { (a, b) } else { (b, a) };
    if big.exact_div(small).is_some() {
        return small.clone();
    }
    for &v in a.vars() {
        if !b.contains(v) {
            return pgcd(&content_wrt(a, v), b);
        }
    }
    for &v in b.vars() {
        if !a.contains(v) {
            return pgcd(a, &content_wrt(b, v));
        }
    }
    let x = *a
        .vars()
        .iter()
        .min_by_key(|v| (a.degree(**v).max(b.degree(**v)), a.degree(**v).min(b.degree(**v))))
        .unwrap();
    let ca = content_wrt(a, x);
    let cb = content_wrt(b, x);
    let c = pgcd(&ca, &cb);
    let pa = if ca.is_one() { a.clone() } else { a.exact_div(&ca).expect("content divides") };
    let pb = if cb.is_one() { b.clone() } else { b.exact_div(&cb).expect("content divides") };
    let g = prs_gcd(&pa, &pb, x);
    c.mul(&g).primitive()
}

type UPoly = Vec<Poly>;

fn trim(u: &mut UPoly) {
    while matches!(u.last(), Some(p) if p.is_zero()) {
        u.pop();
    }
}

fn deg(u: &UPoly) -> usize {
    u.len() - 1
}

fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = deg(b);
    let lb = b.last().unwrap().clone();
    let mut r = a.clone();
    let mut e = deg(a) as i64 - db as i64 + 1;
    while !r.is_empty() && deg(&r) >= db {
        let lr = r.last().unwrap().clone();
        let s = deg(&r) - db;
        let mut nr: UPoly = r.iter().map(|c| c.mul(&lb)).collect();
        for (k, bc) in b.iter().enumerate() {
            nr[k + s] = nr[k + s].sub(&bc.mul(&lr));
        }
        nr.pop();
        trim(&mut nr);
        r = nr;
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        r = r.iter().map(|c| c.mul(&f)).collect();
    }
    r
}

// Gcd of two polynomials primitive with respect to `x`.
fn prs_gcd(a: &Poly, b: &Poly, x: Var) -> Poly {
    let (la, mut ua) = a.coeffs_in(x);
    let (lb, mut ub) = b.coeffs_in(x);
    debug_assert!(la == 0 && lb == 0);
    if ua.len() < ub.len() {
        std::mem::swap(&mut ua, &mut ub);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let d = deg(&ua) - deg(&ub);
        let r = prem(&ua, &ub);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return Poly::one();
        }
        let div = g.mul(&h.pow(d as u32));
        ua = ub;
        ub = r
            .iter()
            .map(|c| c.exact_div(&div).expect("subresultant division is exact"))
            .collect();
        g = ua.last().unwrap().clone();
        if d > 0 {
            let num = g.pow(d as u32);
            let den = h.pow(d as u32 - 1);
            h = num.exact_div(&den).expect("subresultant h update is exact");
        }
    }
    let res = Poly::from_coeffs(x, 0, &ub);
    let c = content_wrt(&res, x);
    let res = if c.is_one() { res } else { res.exact_div(&c).expect("content divides") };
    normalize(&res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }
    fn k(c: i64) -> Poly {
        Poly::constant(c)
    }

    #[test]
    fn gcd_of_products() {
        let f = v(Var::A).sub(&v(Var::Q).pow(2));
        let g1 = v(Var::B).mul(&v(Var::T)).add(&k(3));
        let g2 = v(Var::G).pow(2).sub(&v(Var::A));
        let a = f.mul(&g1).scale(&BigInt::from(6));
        let b = f.mul(&g2).scale(&BigInt::from(-4));
        assert_eq!(gcd(&a, &b), normalize(&f));
    }

    #[test]
    fn coprime_gives_one() {
        let a = v(Var::X).add(&k(1));
        let b = v(Var::X).sub(&k(1));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn univariate_higher_degree() {
        // (x^2+1)(x-3)^2 and (x^2+1)(x+2)
        let x = v(Var::X);
        let f = x.pow(2).add(&k(1));
        let a = f.mul(&x.sub(&k(3)).pow(2));
        let b = f.mul(&x.add(&k(2)));
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn gcd_ignores_monomials() {
        let a = Poly::monomial(&[(Var::T, -2), (Var::A, 1)], BigInt::from(1)).mul(&v(Var::T).add(&k(1)));
        let b = v(Var::T).add(&k(1)).mul(&v(Var::T));
        assert_eq!(gcd(&a, &b), v(Var::T).add(&k(1)));
    }

    #[test]
    fn three_variable_common_factor() {
        let f = v(Var::A).mul(&v(Var::B)).sub(&v(Var::G)).add(&k(1));
        let a = f.pow(2).mul(&v(Var::A).add(&v(Var::G)));
        let b = f.mul(&v(Var::B).sub(&v(Var::G).pow(3)));
        assert_eq!(gcd(&a, &b), normalize(&f));
    }
}
