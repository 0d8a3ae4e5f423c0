//! Multiplicative characters of `Q_p^×` (through their restriction to units
//! mod `p^e` plus the value at `p`) and the standard additive character.

use num_complex::Complex64;

use crate::ring::{reduce, ResidueRing};
use crate::PadicError;

/// `exp(2πi·k/n)`.
pub fn root_of_unity(k: u64, n: u64) -> Complex64 {
    let k = k % n;
    Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64)
}

/// The additive character `ψ(a/p^level) = exp(2πi·a/p^level)`, trivial on `Z_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AddChar {
    p: u64,
}

impl AddChar {
    pub fn new(p: u64) -> AddChar {
        AddChar { p }
    }

    /// `ψ(a·p^{−level})`.
    pub fn eval(&self, a: i64, level: u32) -> Complex64 {
        let m = self.p.pow(level);
        root_of_unity(reduce(a, m), m)
    }
}

/// A character `μ` of `Q_p^×`: `μ(g^m) = ζ^{k·m}` on units (`g` the ring's
/// generator, `ζ` a primitive root of unity of the unit-group order) and
/// `μ(p) = pi`.
#[derive(Clone, Debug)]
pub struct MultChar {
    ring: ResidueRing,
    k: u64,
    pi: Complex64,
}

impl MultChar {
    pub fn new(ring: &ResidueRing, k: u64, pi: Complex64) -> MultChar {
        MultChar { k: k % ring.unit_order(), ring: ring.clone(), pi }
    }

    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    /// Exponent on the generator, modulo the unit-group order.
    pub fn index(&self) -> u64 {
        self.k
    }

    /// Value at the uniformizer `p`.
    pub fn pi_value(&self) -> Complex64 {
        self.pi
    }

    /// Order of the restriction to units.
    pub fn order(&self) -> u64 {
        let n = self.ring.unit_order();
        n / num_integer::gcd(n, self.k)
    }

    /// Smallest `f` with `μ` trivial on `1 + p^f Z_p` (`0` if unramified).
    pub fn conductor(&self) -> u32 {
        if self.k == 0 {
            return 0;
        }
        let (p, n) = (self.ring.p(), self.ring.unit_order());
        // 1 + p^f is generated by g^{(p−1)p^{f−1}}.
        (1..=self.ring.e())
            .find(|f| (self.k as u128 * ((p - 1) * p.pow(f - 1)) as u128).is_multiple_of(n as u128))
            .expect("trivial on 1 + p^e")
    }

    /// Root-of-unity exponent of `μ(a)` (value `ζ_n^{result}` with `n` the
    /// unit-group order), `None` for non-units.
    pub fn exponent(&self, a: u64) -> Option<u64> {
        let n = self.ring.unit_order();
        self.ring.dlog(a).map(|m| ((m as u128 * self.k as u128) % n as u128) as u64)
    }

    /// `μ(a)` for a residue `a`; zero for non-units.
    pub fn value(&self, a: u64) -> Complex64 {
        match self.exponent(a) {
            Some(x) => root_of_unity(x, self.ring.unit_order()),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// `μ(a)` for a signed integer, reduced mod `p^e`.
    pub fn value_int(&self, a: i64) -> Complex64 {
        self.value(self.ring.reduce(a))
    }

    /// `μ(num/den)` for a nonzero rational number.
    pub fn value_rational(&self, mut num: i64, mut den: i64) -> Result<Complex64, PadicError> {
        if num == 0 || den == 0 {
            return Err(PadicError::Precondition("μ is evaluated at a nonzero rational".into()));
        }
        let p = self.ring.p() as i64;
        let mut v = 0i32;
        while num % p == 0 {
            num /= p;
            v += 1;
        }
        while den % p == 0 {
            den /= p;
            v -= 1;
        }
        let r = &self.ring;
        let u = r.mul(r.reduce(num), r.inv(r.reduce(den))?);
        Ok(self.value(u) * self.pi.powi(v))
    }

    /// Complex conjugate character `μ̄ = μ⁻¹` (for unitary `μ(p)`).
    pub fn conj(&self) -> MultChar {
        let n = self.ring.unit_order();
        MultChar { ring: self.ring.clone(), k: (n - self.k) % n, pi: self.pi.conj() }
    }

    /// The same character with a different value at `p`.
    pub fn with_pi(&self, pi: Complex64) -> MultChar {
        MultChar { ring: self.ring.clone(), k: self.k, pi }
    }
}

/// All characters of `(Z/p^e)^×` with exact conductor `f`, each with `μ(p) = pi`.
pub fn characters_with_conductor(ring: &ResidueRing, f: u32, pi: Complex64) -> Vec<MultChar> {
    (0..ring.unit_order())
        .map(|k| MultChar::new(ring, k, pi))
        .filter(|c| c.conductor() == f)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn conductor_counts() {
        // Primitive characters mod p^e: p^{e−2}(p−1)² for e ≥ 2, p−2 for e = 1.
        for (p, e) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2), (7, 2), (3, 3)] {
            let r = ResidueRing::new(p, e).unwrap();
            let n = characters_with_conductor(&r, e, one()).len() as u64;
            let expected = if e == 1 { p - 2 } else { p.pow(e - 2) * (p - 1) * (p - 1) };
            assert_eq!(n, expected, "p={p} e={e}");
        }
    }

    #[test]
    fn quadratic_character_is_legendre() {
        let r = ResidueRing::new(7, 1).unwrap();
        let chi = MultChar::new(&r, 3, one());
        for a in 1..7u64 {
            let leg = if (1..7u64).any(|x| x * x % 7 == a) { 1.0 } else { -1.0 };
            assert!((chi.value(a) - Complex64::new(leg, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn rational_values_use_pi() {
        let r = ResidueRing::new(5, 1).unwrap();
        let chi = MultChar::new(&r, 1, Complex64::i());
        let v = chi.value_rational(50, 3).unwrap();
        let expect = Complex64::i().powi(2) * chi.value(2 * r.inv(3).unwrap() % 5);
        assert!((v - expect).norm() < 1e-12);
        assert!((chi.value_rational(1, 5).unwrap() - Complex64::i().powi(-1)).norm() < 1e-12);
    }

    #[test]
    fn conj_is_inverse() {
        let r = ResidueRing::new(3, 2).unwrap();
        let chi = MultChar::new(&r, 1, Complex64::from_polar(1.0, 0.3));
        let c = chi.conj();
        for a in r.units() {
            assert!((chi.value(a) * c.value(a) - one()).norm() < 1e-12);
        }
    }
}
