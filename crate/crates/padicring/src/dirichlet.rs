//! Dirichlet characters modulo odd `M`, assembled from prime-power components.

use num_complex::Complex64;

use crate::character::{root_of_unity, MultChar};
use crate::exec::{sum_range, Exec};
use crate::ring::ResidueRing;
use crate::PadicError;

/// `χ = Π_p χ_p` with `χ_p` a character of `(Z/p^{e_p})^×`; `M = Π p^{e_p}`.
#[derive(Clone, Debug)]
pub struct DirichletChar {
    parts: Vec<MultChar>,
    modulus: u64,
}

impl DirichletChar {
    /// The trivial character modulo 1.
    pub fn trivial() -> DirichletChar {
        DirichletChar { parts: Vec::new(), modulus: 1 }
    }

    /// Components must sit over distinct primes.
    pub fn new(parts: Vec<MultChar>) -> Result<DirichletChar, PadicError> {
        let mut primes: Vec<u64> = parts.iter().map(|c| c.ring().p()).collect();
        primes.sort_unstable();
        if primes.windows(2).any(|w| w[0] == w[1]) {
            return Err(PadicError::Precondition("repeated prime in Dirichlet character".into()));
        }
        let modulus = parts.iter().map(|c| c.ring().modulus()).product();
        Ok(DirichletChar { parts, modulus })
    }

    /// Build from `(p, e, k)` triples (exponent `k` on each ring's generator).
    pub fn from_indices(data: &[(u64, u32, u64)]) -> Result<DirichletChar, PadicError> {
        let one = Complex64::new(1.0, 0.0);
        let parts = data
            .iter()
            .map(|&(p, e, k)| Ok(MultChar::new(&ResidueRing::new(p, e)?, k, one)))
            .collect::<Result<Vec<_>, PadicError>>()?;
        DirichletChar::new(parts)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn parts(&self) -> &[MultChar] {
        &self.parts
    }

    /// `χ(a)`, zero when `gcd(a, M) > 1`.
    pub fn value(&self, a: i64) -> Complex64 {
        self.parts.iter().fold(Complex64::new(1.0, 0.0), |acc, c| acc * c.value_int(a))
    }

    /// Primitive iff every component has conductor equal to its level.
    pub fn is_primitive(&self) -> bool {
        self.parts.iter().all(|c| c.conductor() == c.ring().e())
    }

    /// Real-valued (all component orders divide 2).
    pub fn is_real(&self) -> bool {
        self.parts.iter().all(|c| c.order() <= 2)
    }

    pub fn conj(&self) -> DirichletChar {
        DirichletChar { parts: self.parts.iter().map(|c| c.conj()).collect(), modulus: self.modulus }
    }

    /// `G(χ) = Σ_{a mod M} χ(a) e^{2πi a/M}` by direct summation.
    pub fn gauss_sum(&self) -> Complex64 {
        let m = self.modulus;
        sum_range(Exec::default(), m, |a| self.value(a as i64) * root_of_unity(a, m))
    }

    /// `G(χ)` through the Chinese remainder factorization
    /// `G(χ) = Π_p χ_p(M/p^{e_p}) G(χ_p)`.
    pub fn gauss_sum_crt(&self) -> Complex64 {
        let m = self.modulus;
        self.parts.iter().fold(Complex64::new(1.0, 0.0), |acc, c| {
            let pe = c.ring().modulus();
            let local = sum_range(Exec::Sequential, pe, |a| c.value(a) * root_of_unity(a, pe));
            acc * c.value_int((m / pe) as i64) * local
        })
    }
}
