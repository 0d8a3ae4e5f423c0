//! The form class group `Cl(D)` of a fundamental discriminant `D < 0`, its
//! invariant-factor structure and its characters.

use std::collections::HashMap;

use num_complex::Complex64;
use num_integer::Integer;

use crate::form::{compose_forms, is_fundamental, reduce_form, QuadForm};
use crate::ClassGroupError;

/// Reduced primitive forms of discriminant `d`, principal form first, in
/// increasing `(a, b)` order otherwise.
pub fn enumerate_classes(d: i64) -> Result<Vec<QuadForm>, ClassGroupError> {
    if !is_fundamental(d) {
        return Err(ClassGroupError::NotFundamental(d));
    }
    let mut out = Vec::new();
    let mut a = 1i64;
    // Reduced forms satisfy 3a² ≤ |D|.
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let f = QuadForm::new(a, b, num / (4 * a));
            if f.is_reduced() && f.is_primitive() {
                out.push(f);
            }
        }
        a += 1;
    }
    Ok(out)
}

/// Number of roots of unity in the quadratic order of discriminant `d`.
pub fn w_d(d: i64) -> u32 {
    match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// A finite class group with its multiplication table and a basis adapted to
/// the invariant factors `n₁ | n₂ | … | n_r`.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    disc: i64,
    classes: Vec<QuadForm>,
    index: HashMap<QuadForm, usize>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    invariants: Vec<u64>,
    basis: Vec<usize>,
    coords: Vec<Vec<u64>>,
}

impl ClassGroup {
    pub fn new(d: i64) -> Result<ClassGroup, ClassGroupError> {
        let classes = enumerate_classes(d)?;
        let index: HashMap<QuadForm, usize> = classes.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let h = classes.len();
        let mut table = vec![vec![0; h]; h];
        for i in 0..h {
            for j in i..h {
                let f = compose_forms(classes[i], classes[j])?;
                let k = *index.get(&f).ok_or(ClassGroupError::MissingClass(f))?;
                table[i][j] = k;
                table[j][i] = k;
            }
        }
        let inverse = classes
            .iter()
            .map(|f| index[&reduce_form(f.opposite()).expect("positive definite").form])
            .collect();
        let mut g = ClassGroup {
            disc: d,
            classes,
            index,
            table,
            inverse,
            invariants: Vec::new(),
            basis: Vec::new(),
            coords: Vec::new(),
        };
        g.invariants = g.invariant_factors();
        g.basis = g.find_basis().ok_or(ClassGroupError::Structure)?;
        g.coords = g.coordinates();
        Ok(g)
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// The class number `h(D)`.
    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[QuadForm] {
        &self.classes
    }

    /// Index of the principal class (always `0`).
    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the class of an arbitrary positive-definite form of discriminant `D`.
    pub fn class_of(&self, f: QuadForm) -> Result<usize, ClassGroupError> {
        if f.disc() != self.disc {
            return Err(ClassGroupError::DiscriminantMismatch(self.disc, f.disc()));
        }
        if !f.is_primitive() {
            return Err(ClassGroupError::NotPrimitive(f));
        }
        let r = reduce_form(f)?.form;
        self.index.get(&r).copied().ok_or(ClassGroupError::MissingClass(r))
    }

    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Class of the conjugate form `(a, −b, c)`.
    pub fn conjugate_class(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn pow(&self, i: usize, k: u64) -> usize {
        (0..k).fold(self.identity(), |acc, _| self.compose(acc, i))
    }

    pub fn element_order(&self, i: usize) -> u64 {
        let mut x = i;
        let mut n = 1;
        while x != self.identity() {
            x = self.compose(x, i);
            n += 1;
        }
        n
    }

    /// Invariant factors `n₁ | … | n_r` with `∏ nᵢ = h` (empty for the trivial group).
    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    /// Basis classes `g₁, …, g_r` with `ord gᵢ = nᵢ`.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Exponents `(k₁, …, k_r)` with class `i = ∏ gⱼ^{kⱼ}`.
    pub fn coords(&self, i: usize) -> &[u64] {
        &self.coords[i]
    }

    /// Exponent of the group, `n_r` (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.invariants.last().copied().unwrap_or(1)
    }

    fn count_killed_by(&self, k: u64) -> u64 {
        (0..self.order()).filter(|&i| self.pow(i, k) == self.identity()).count() as u64
    }

    fn invariant_factors(&self) -> Vec<u64> {
        let mut h = self.order() as u64;
        let mut primes = Vec::new();
        let mut p = 2;
        while h > 1 {
            if h.is_multiple_of(p) {
                primes.push(p);
                while h.is_multiple_of(p) {
                    h /= p;
                }
            }
            p += 1;
        }
        // For each p, the number of cyclic factors of order ≥ p^i is
        // log_p(|G[p^i]| / |G[p^{i−1}]|).
        let mut primary: Vec<Vec<u64>> = Vec::new();
        for p in primes {
            let mut prev = 1u64;
            let mut ge: Vec<u32> = Vec::new();
            let mut pk = p;
            loop {
                let n = self.count_killed_by(pk);
                if n == prev {
                    break;
                }
                let mut ratio = n / prev;
                let mut cnt = 0;
                while ratio > 1 {
                    ratio /= p;
                    cnt += 1;
                }
                ge.push(cnt);
                prev = n;
                pk *= p;
            }
            // Factor sizes p^i with multiplicity ge[i−1] − ge[i], largest first.
            let mut sizes = Vec::new();
            for i in (0..ge.len()).rev() {
                let next = ge.get(i + 1).copied().unwrap_or(0);
                for _ in 0..ge[i] - next {
                    sizes.push(p.pow(i as u32 + 1));
                }
            }
            primary.push(sizes);
        }
        let r = primary.iter().map(Vec::len).max().unwrap_or(0);
        let mut inv = vec![1u64; r];
        for sizes in &primary {
            for (k, s) in sizes.iter().enumerate() {
                inv[r - 1 - k] *= s;
            }
        }
        inv
    }

    fn find_basis(&self) -> Option<Vec<usize>> {
        fn extend(g: &ClassGroup, k: usize, span: Vec<bool>, chosen: &mut Vec<usize>) -> bool {
            if k == 0 {
                return span.iter().all(|b| *b);
            }
            let n = g.invariants[k - 1];
            let size: usize = span.iter().filter(|b| **b).count();
            for cand in 0..g.order() {
                if g.element_order(cand) != n {
                    continue;
                }
                // New span = span · <cand>; require it to have size |span|·n.
                let mut next = vec![false; g.order()];
                let mut power = g.identity();
                for _ in 0..n {
                    for (x, inside) in span.iter().enumerate() {
                        if *inside {
                            next[g.compose(x, power)] = true;
                        }
                    }
                    power = g.compose(power, cand);
                }
                if next.iter().filter(|b| **b).count() != size * n as usize {
                    continue;
                }
                chosen.push(cand);
                if extend(g, k - 1, next, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut span = vec![false; self.order()];
        span[self.identity()] = true;
        let mut chosen = Vec::new();
        if extend(self, self.invariants.len(), span, &mut chosen) {
            chosen.reverse();
            Some(chosen)
        } else {
            None
        }
    }

    fn coordinates(&self) -> Vec<Vec<u64>> {
        let r = self.basis.len();
        let mut coords = vec![Vec::new(); self.order()];
        let mut k = vec![0u64; r];
        loop {
            let x = k.iter().zip(&self.basis).fold(self.identity(), |acc, (e, g)| self.compose(acc, self.pow(*g, *e)));
            coords[x] = k.clone();
            let mut i = 0;
            loop {
                if i == r {
                    return coords;
                }
                k[i] += 1;
                if k[i] < self.invariants[i] {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
        }
    }

    /// All `h` characters, indexed like the classes (character `j` has
    /// exponent vector `coords(j)` against the basis).
    pub fn characters(&self) -> Vec<ClassChar> {
        (0..self.order()).map(|j| self.character(j)).collect()
    }

    /// The character paired with class `j` through the basis.
    pub fn character(&self, j: usize) -> ClassChar {
        let n = self.exponent();
        let cj = &self.coords[j];
        let exps = self
            .coords
            .iter()
            .map(|ck| {
                let s: u64 = (0..self.basis.len()).map(|i| cj[i] * ck[i] * (n / self.invariants[i])).sum();
                s % n
            })
            .collect();
        ClassChar { modulus: n, exps }
    }
}

/// A character of a class group: the value at class `i` is `exp(2πi·exps[i]/modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassChar {
    modulus: u64,
    exps: Vec<u64>,
}

impl ClassChar {
    pub fn value(&self, i: usize) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::TAU * self.exps[i] as f64 / self.modulus as f64)
    }

    pub fn conj(&self) -> ClassChar {
        ClassChar { modulus: self.modulus, exps: self.exps.iter().map(|e| (self.modulus - e) % self.modulus).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|e| *e == 0)
    }

    /// Order of the character.
    pub fn order(&self) -> u64 {
        self.exps.iter().fold(1, |acc, e| acc.lcm(&(self.modulus / self.modulus.gcd(e))))
    }

    /// Real-valued (order dividing 2).
    pub fn is_real(&self) -> bool {
        self.order() <= 2
    }
}

/// `Σ_x coeffs[x]·χ(x)⁻¹` over the classes.
pub fn bessel_coeff_sum(coeffs: &[Complex64], chi: &ClassChar) -> Result<Complex64, ClassGroupError> {
    if coeffs.len() != chi.exps.len() {
        return Err(ClassGroupError::LengthMismatch { expected: chi.exps.len(), found: coeffs.len() });
    }
    Ok(coeffs.iter().enumerate().map(|(i, c)| c * chi.value(i).conj()).sum())
}
