//! The residue ring `Z/p^e` and the unramified quadratic Galois ring
//! `GR(p^e, 2) = (Z/p^e)[ω]/(ω² − δ)`.

use std::sync::Arc;

use crate::PadicError;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut k: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        k >>= 1;
    }
    acc
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

/// Largest table the rings are willing to build (elements of `Z/p^e`).
pub const MAX_MODULUS: u64 = 1 << 24;

/// `Z/p^e` for an odd prime `p`, with a generator of the cyclic unit group and
/// a discrete-logarithm table.
#[derive(Clone, Debug)]
pub struct ResidueRing {
    p: u64,
    e: u32,
    modulus: u64,
    generator: u64,
    order: u64,
    dlog: Arc<[u32]>,
}

const NOT_UNIT: u32 = u32::MAX;

impl ResidueRing {
    pub fn new(p: u64, e: u32) -> Result<ResidueRing, PadicError> {
        if p == 2 {
            return Err(PadicError::EvenPrime);
        }
        if !is_prime(p) {
            return Err(PadicError::NotPrime(p));
        }
        if e == 0 {
            return Err(PadicError::ZeroExponent);
        }
        let modulus = p
            .checked_pow(e)
            .filter(|m| *m <= MAX_MODULUS)
            .ok_or(PadicError::TooLarge { p, e })?;
        let order = modulus / p * (p - 1);
        let generator = primitive_root(p, e, modulus, order);
        let mut dlog = vec![NOT_UNIT; modulus as usize];
        let mut x = 1u64;
        for k in 0..order {
            dlog[x as usize] = k as u32;
            x = mul_mod(x, generator, modulus);
        }
        Ok(ResidueRing { p, e, modulus, generator, order, dlog: dlog.into() })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `p^e`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Order `p^{e−1}(p−1)` of the unit group.
    pub fn unit_order(&self) -> u64 {
        self.order
    }

    /// Generator of the cyclic unit group.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn reduce(&self, a: i64) -> u64 {
        reduce(a, self.modulus)
    }

    pub fn is_unit(&self, a: u64) -> bool {
        !a.is_multiple_of(self.p)
    }

    /// Discrete logarithm to the stored generator, `None` for non-units.
    pub fn dlog(&self, a: u64) -> Option<u64> {
        match self.dlog[(a % self.modulus) as usize] {
            NOT_UNIT => None,
            k => Some(k as u64),
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus)
    }

    pub fn pow(&self, a: u64, k: u64) -> u64 {
        pow_mod(a, k, self.modulus)
    }

    pub fn inv(&self, a: u64) -> Result<u64, PadicError> {
        let k = self.dlog(a).ok_or(PadicError::NotUnit(a))?;
        Ok(self.pow(self.generator, (self.order - k) % self.order))
    }

    /// p-adic valuation of `a` as an element of `Z/p^e` (`e` for zero).
    pub fn valuation(&self, a: u64) -> u32 {
        let mut a = a % self.modulus;
        if a == 0 {
            return self.e;
        }
        let mut v = 0;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            v += 1;
        }
        v
    }

    /// All units in increasing order.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (1..self.modulus).filter(move |a| a % self.p != 0)
    }
}

fn primitive_root(p: u64, e: u32, modulus: u64, order: u64) -> u64 {
    let phi_p = p - 1;
    let mut factors = Vec::new();
    let mut n = phi_p;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    let mut g = 2;
    while factors.iter().any(|f| pow_mod(g, phi_p / f, p) == 1) {
        g += 1;
    }
    // A primitive root mod p lifts to one mod p^e (e ≥ 2) unless g^{p−1} ≡ 1 mod p².
    if e >= 2 && pow_mod(g, phi_p, p * p) == 1 {
        g += p;
    }
    debug_assert_eq!(pow_mod(g, order, modulus), 1);
    g
}

/// Element `x + y·ω` of a Galois ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GElem {
    pub x: u64,
    pub y: u64,
}

/// `GR(p^e, 2) = (Z/p^e)[ω]/(ω² − δ)` with `δ` a non-square unit mod `p`.
///
/// The residue field is `F_{p²}`. The nontrivial automorphism `ω ↦ −ω` is the
/// Frobenius lift (it reduces to `z ↦ z^p` mod p), the norm is
/// `x² − δy²` and the trace `2x`.
#[derive(Clone, Debug)]
pub struct GaloisRing {
    base: ResidueRing,
    delta: u64,
}

impl GaloisRing {
    /// Uses the least quadratic non-residue mod `p` as `δ`.
    pub fn new(p: u64, e: u32) -> Result<GaloisRing, PadicError> {
        let base = ResidueRing::new(p, e)?;
        let delta = (2..p).find(|d| pow_mod(*d, (p - 1) / 2, p) == p - 1).expect("odd prime has a non-residue");
        Ok(GaloisRing { base, delta })
    }

    /// `δ` must be a quadratic non-residue mod `p`.
    pub fn with_delta(p: u64, e: u32, delta: i64) -> Result<GaloisRing, PadicError> {
        let base = ResidueRing::new(p, e)?;
        let d = base.reduce(delta);
        if d % p == 0 || pow_mod(d % p, (p - 1) / 2, p) != p - 1 {
            return Err(PadicError::Precondition(format!("δ = {delta} is not a non-residue mod {p}")));
        }
        Ok(GaloisRing { base, delta: d })
    }

    pub fn base(&self) -> &ResidueRing {
        &self.base
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// `p^{2e}`.
    pub fn size(&self) -> u64 {
        self.base.modulus * self.base.modulus
    }

    /// Number of units, `p^{2(e−1)}(p²−1)`.
    pub fn unit_order(&self) -> u64 {
        let m = self.base.modulus / self.base.p;
        m * m * (self.base.p * self.base.p - 1)
    }

    pub fn elem(&self, x: i64, y: i64) -> GElem {
        GElem { x: self.base.reduce(x), y: self.base.reduce(y) }
    }

    /// Bijection `[0, p^{2e}) → GR`.
    pub fn from_index(&self, i: u64) -> GElem {
        GElem { x: i % self.base.modulus, y: i / self.base.modulus }
    }

    pub fn add(&self, a: GElem, b: GElem) -> GElem {
        GElem { x: self.base.add(a.x, b.x), y: self.base.add(a.y, b.y) }
    }

    pub fn neg(&self, a: GElem) -> GElem {
        let m = self.base.modulus;
        GElem { x: (m - a.x) % m, y: (m - a.y) % m }
    }

    pub fn mul(&self, a: GElem, b: GElem) -> GElem {
        let r = &self.base;
        let yy = r.mul(r.mul(a.y, b.y), self.delta);
        GElem { x: r.add(r.mul(a.x, b.x), yy), y: r.add(r.mul(a.x, b.y), r.mul(a.y, b.x)) }
    }

    pub fn pow(&self, a: GElem, mut k: u64) -> GElem {
        let mut acc = GElem { x: 1 % self.base.modulus, y: 0 };
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        acc
    }

    pub fn frobenius(&self, a: GElem) -> GElem {
        GElem { x: a.x, y: (self.base.modulus - a.y) % self.base.modulus }
    }

    pub fn norm(&self, a: GElem) -> u64 {
        let r = &self.base;
        let m = r.modulus;
        (r.mul(a.x, a.x) + m - r.mul(r.mul(a.y, a.y), self.delta)) % m
    }

    pub fn trace(&self, a: GElem) -> u64 {
        self.base.add(a.x, a.x)
    }

    pub fn is_unit(&self, a: GElem) -> bool {
        self.base.is_unit(self.norm(a))
    }

    /// Reduction to level `f ≤ e` (coordinates mod `p^f`).
    pub fn reduce_to(&self, a: GElem, f: u32) -> GElem {
        let m = self.base.p.pow(f);
        GElem { x: a.x % m, y: a.y % m }
    }
}
