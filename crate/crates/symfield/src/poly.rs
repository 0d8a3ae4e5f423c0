//! Sparse multivariate Laurent polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::var::Var;

pub type Exps = SmallVec<[i32; 8]>;

/// Sparse Laurent polynomial over Z.
///
/// `vars` is sorted ascending and contains exactly the variables that occur
/// with a nonzero exponent somewhere; `terms` is sorted strictly descending in
/// lexicographic order of the exponent vectors and holds no zero coefficient.
/// Both invariants make structural equality coincide with mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Vec<Var>,
    terms: Vec<(Exps, BigInt)>,
}

fn union_vars(a: &[Var], b: &[Var]) -> Vec<Var> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

fn min_at(terms: &[(Exps, BigInt)], i: usize) -> i32 {
    terms.iter().map(|t| t.0[i]).min().unwrap_or(0)
}

fn max_at(terms: &[(Exps, BigInt)], i: usize) -> i32 {
    terms.iter().map(|t| t.0[i]).max().unwrap_or(0)
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { vars: Vec::new(), terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Poly {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { vars: Vec::new(), terms: vec![(Exps::new(), c)] }
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(&[(v, 1)], BigInt::one())
    }

    /// `c * Π v^e`; repeated variables have their exponents added.
    pub fn monomial(powers: &[(Var, i32)], c: BigInt) -> Poly {
        let mut vars: Vec<Var> = powers.iter().map(|p| p.0).collect();
        vars.sort();
        vars.dedup();
        let mut e: Exps = SmallVec::from_elem(0, vars.len());
        for (v, k) in powers {
            let i = vars.binary_search(v).unwrap();
            e[i] += k;
        }
        Poly::from_raw(vars, vec![(e, c)])
    }

    /// Normalize arbitrary terms: sort, merge duplicates, drop zeros, prune unused vars.
    pub fn from_raw(vars: Vec<Var>, mut terms: Vec<(Exps, BigInt)>) -> Poly {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Exps, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|t| !t.1.is_zero());
        let mut p = Poly { vars, terms: merged };
        p.prune();
        p
    }

    fn prune(&mut self) {
        let n = self.vars.len();
        let used: Vec<bool> = (0..n).map(|i| self.terms.iter().any(|t| t.0[i] != 0)).collect();
        if used.iter().all(|u| *u) {
            return;
        }
        let keep: Vec<usize> = (0..n).filter(|i| used[*i]).collect();
        self.vars = keep.iter().map(|i| self.vars[*i]).collect();
        for t in &mut self.terms {
            t.0 = keep.iter().map(|i| t.0[*i]).collect();
        }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn terms(&self) -> &[(Exps, BigInt)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty() && self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.vars.is_empty() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading coefficient under the lexicographic order.
    pub fn lc(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_default()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.vars.binary_search(&v).is_ok()
    }

    /// Exponent vectors re-expressed over a superset of `self.vars`.
    fn embed(&self, vars: &[Var]) -> Vec<(Exps, BigInt)> {
        if vars == self.vars.as_slice() {
            return self.terms.clone();
        }
        let idx: Vec<usize> = self.vars.iter().map(|v| vars.binary_search(v).unwrap()).collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut ne: Exps = SmallVec::from_elem(0, vars.len());
                for (k, &i) in idx.iter().enumerate() {
                    ne[i] = e[k];
                }
                (ne, c.clone())
            })
            .collect()
    }

    fn merge_with(&self, other: &Poly, negate: bool) -> Poly {
        let vars = union_vars(&self.vars, &other.vars);
        let a = self.embed(&vars);
        let b = other.embed(&vars);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        let mut p = Poly { vars, terms: out };
        p.prune();
        p
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.merge_with(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        if other.is_zero() {
            return self.clone();
        }
        self.merge_with(other, true)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let vars = union_vars(&self.vars, &other.vars);
        let a = self.embed(&vars);
        let b = other.embed(&vars);
        let mut prod: Vec<(Exps, BigInt)> = Vec::with_capacity(a.len() * b.len());
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Exps = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                prod.push((e, ca * cb));
            }
        }
        Poly::from_raw(vars, prod)
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiply by the monomial `Π vars[i]^shift[i]` (shift aligned with `vars`).
    pub fn shift(&self, vars: &[Var], shift: &[i32]) -> Poly {
        if shift.iter().all(|s| *s == 0) {
            return self.clone();
        }
        let uv = union_vars(&self.vars, vars);
        let idx: Vec<usize> = vars.iter().map(|v| uv.binary_search(v).unwrap()).collect();
        let terms = self
            .embed(&uv)
            .into_iter()
            .map(|(mut e, c)| {
                for (k, &i) in idx.iter().enumerate() {
                    e[i] += shift[k];
                }
                (e, c)
            })
            .collect();
        // Shifting preserves the order, but variables may cancel out.
        let mut p = Poly { vars: uv, terms };
        p.prune();
        p
    }

    /// Componentwise minimum exponent (the monomial content), aligned with `vars()`.
    pub fn min_exps(&self) -> Exps {
        let n = self.vars.len();
        let mut m: Exps = SmallVec::from_elem(i32::MAX, n);
        for (e, _) in &self.terms {
            for i in 0..n {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.terms.is_empty() {
            m.iter_mut().for_each(|x| *x = 0);
        }
        m
    }

    /// Split `self = m * p` with `m` a monomial and `p` a polynomial not divisible
    /// by any variable. Returns (vars, exponents of m, p).
    pub fn strip_monomial(&self) -> (Vec<Var>, Exps, Poly) {
        let m = self.min_exps();
        let neg: Vec<i32> = m.iter().map(|x| -x).collect();
        (self.vars.clone(), m, self.shift(&self.vars.clone(), &neg))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|x| *x >= 0))
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division of every coefficient by an integer.
    pub fn div_integer(&self, k: &BigInt) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    debug_assert!((c % k).is_zero());
                    (e.clone(), c / k)
                })
                .collect(),
        }
    }

    /// Content removed and sign normalized so the leading coefficient is positive.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        if g.is_one() {
            self.clone()
        } else {
            self.div_integer(&g)
        }
    }

    /// Minimum and maximum exponent of `v` (zero if absent).
    pub fn degree_range(&self, v: Var) -> (i32, i32) {
        match self.vars.binary_search(&v) {
            Err(_) => (0, 0),
            Ok(i) => {
                let lo = self.terms.iter().map(|t| t.0[i]).min().unwrap_or(0);
                let hi = self.terms.iter().map(|t| t.0[i]).max().unwrap_or(0);
                (lo, hi)
            }
        }
    }

    pub fn degree(&self, v: Var) -> i32 {
        self.degree_range(v).1
    }

    /// Coefficients of `self` as a polynomial in `v`, indexed from exponent `lo`.
    /// Returns `(lo, coeffs)` with each coefficient free of `v`.
    pub fn coeffs_in(&self, v: Var) -> (i32, Vec<Poly>) {
        let Ok(i) = self.vars.binary_search(&v) else {
            return (0, vec![self.clone()]);
        };
        let (lo, hi) = self.degree_range(v);
        let rest: Vec<Var> = self.vars.iter().copied().filter(|w| *w != v).collect();
        let mut buckets: Vec<Vec<(Exps, BigInt)>> = vec![Vec::new(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(i);
            buckets[(k - lo) as usize].push((ne, c.clone()));
        }
        let coeffs = buckets.into_iter().map(|t| Poly::from_raw(rest.clone(), t)).collect();
        (lo, coeffs)
    }

    /// Inverse of [`Poly::coeffs_in`].
    pub fn from_coeffs(v: Var, lo: i32, coeffs: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&c.shift(&[v], &[lo + k as i32]));
        }
        acc
    }

    /// Exact quotient `self / d` if it exists (Laurent exponents allowed).
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(k) = d.as_constant() {
            if self.terms.iter().all(|(_, c)| (c % &k).is_zero()) {
                return Some(Poly {
                    vars: self.vars.clone(),
                    terms: self.terms.iter().map(|(e, c)| (e.clone(), c / &k)).collect(),
                });
            }
            return None;
        }
        let vars = union_vars(&self.vars, &d.vars);
        let num = self.embed(&vars);
        let den = d.embed(&vars);
        if d.is_monomial() {
            let (de, dc) = &den[0];
            let mut out = Vec::with_capacity(num.len());
            for (e, c) in num {
                if !(&c % dc).is_zero() {
                    return None;
                }
                let ne: Exps = e.iter().zip(de.iter()).map(|(x, y)| x - y).collect();
                out.push((ne, c / dc));
            }
            let mut p = Poly { vars, terms: out };
            p.prune();
            return Some(p);
        }
        let n = vars.len();
        let sub = |a: &Exps, b: &Exps| -> Exps { a.iter().zip(b.iter()).map(|(x, y)| x - y).collect() };
        let lower = sub(&num.last().unwrap().0, &den.last().unwrap().0);
        // Per-variable degree bounds of any quotient: these make the search
        // space finite even though lex order on Z^n is not well-founded.
        let box_lo: Exps = (0..n).map(|i| min_at(&num, i) - min_at(&den, i)).collect();
        let box_hi: Exps = (0..n).map(|i| max_at(&num, i) - max_at(&den, i)).collect();
        let (dle, dlc) = den[0].clone();
        let mut rem: BTreeMap<Exps, BigInt> = num.into_iter().collect();
        let mut quot: Vec<(Exps, BigInt)> = Vec::new();
        while let Some((re, rc)) = rem.pop_last() {
            let te = sub(&re, &dle);
            if te < lower || (0..n).any(|i| te[i] < box_lo[i] || te[i] > box_hi[i]) {
                return None;
            }
            let (tc, r) = rc.div_rem(&dlc);
            if !r.is_zero() {
                return None;
            }
            for (e, c) in den.iter().skip(1) {
                let mut pe: Exps = SmallVec::with_capacity(n);
                for k in 0..n {
                    pe.push(e[k] + te[k]);
                }
                let v = c * &tc;
                match rem.entry(pe) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= v;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        slot.insert(-v);
                    }
                }
            }
            quot.push((te, tc));
        }
        let mut p = Poly { vars, terms: quot };
        p.prune();
        Some(p)
    }

    /// Evaluate with floating-point values for every variable present.
    pub fn eval_f64(&self, value: &dyn Fn(Var) -> Option<f64>) -> Option<f64> {
        let vals: Option<Vec<f64>> = self.vars.iter().map(|v| value(*v)).collect();
        let vals = vals?;
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let mut t = c.to_f64()?;
            for (x, k) in vals.iter().zip(e.iter()) {
                t *= x.powi(*k);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Sorted-monomial text, e.g. `2*A*G^2 + 1 - T^-1`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e.iter())
                .filter(|(_, x)| **x != 0)
                .map(|(v, x)| if *x == 1 { v.name() } else { format!("{}^{}", v, x) })
                .collect();
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }
    fn c(k: i64) -> Poly {
        Poly::constant(k)
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = v(Var::A).add(&c(3));
        assert!(p.sub(&p).is_zero());
        assert!(p.sub(&p).vars().is_empty());
    }

    #[test]
    fn mul_and_exact_div() {
        let a = v(Var::A).sub(&v(Var::Q).pow(2));
        let b = v(Var::B).add(&v(Var::T).shift(&[Var::T], &[-3]));
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert!(p.add(&c(1)).exact_div(&a).is_none());
    }

    #[test]
    fn laurent_exact_div_terminates_when_inexact() {
        let a = v(Var::X).add(&c(1));
        let b = v(Var::X).sub(&c(1));
        assert!(a.exact_div(&b).is_none());
        let xi = Poly::monomial(&[(Var::X, -1)], BigInt::one());
        assert!(xi.add(&c(1)).exact_div(&b).is_none());
    }

    #[test]
    fn coeffs_round_trip() {
        let p = v(Var::A).mul(&v(Var::X).pow(3)).add(&v(Var::B)).add(&Poly::monomial(&[(Var::X, -1)], 5.into()));
        let (lo, cs) = p.coeffs_in(Var::X);
        assert_eq!(lo, -1);
        assert_eq!(Poly::from_coeffs(Var::X, lo, &cs), p);
    }

    #[test]
    fn text_is_sorted() {
        let p = c(1).sub(&Poly::monomial(&[(Var::T, -1)], 1.into())).add(&Poly::monomial(&[(Var::A, 1), (Var::G, 2)], 2.into()));
        assert_eq!(p.to_text(), "2*A*G^2 + 1 - T^-1");
    }

    #[test]
    fn strip_monomial_factor() {
        let p = Poly::monomial(&[(Var::A, 2), (Var::T, -1)], 1.into()).add(&Poly::monomial(&[(Var::A, 1)], 3.into()));
        let (vars, m, rest) = p.strip_monomial();
        assert_eq!(rest.min_exps().iter().copied().max(), Some(0));
        assert_eq!(rest.shift(&vars, &m), p);
    }
}
