//! Character sums over `Z/p^e` and `GR(p^e, 2)`, each paired with the closed
//! form it is expected to equal.
//!
//! Integrals `∫_{Z_p^×} f(a) d^×a` (Haar measure with total mass 1) of functions
//! that are constant on cosets of `1 + p^L` are computed exactly as averages
//! over `(Z/p^L)^×`.

use num_complex::Complex64;

use crate::character::{AddChar, MultChar};
use crate::exec::{sum_range, Exec};
use crate::ring::{GElem, GaloisRing, ResidueRing};
use crate::PadicError;

fn require_conductor(mu: &MultChar) -> Result<u32, PadicError> {
    let e = mu.ring().e();
    let f = mu.conductor();
    if f != e {
        return Err(PadicError::ConductorMismatch { expected: e, found: f });
    }
    Ok(e)
}

fn units_of(ring: &ResidueRing) -> Vec<u64> {
    ring.units().collect()
}

/// Root number `W_F(μ,ψ) = q^{−e/2} μ(p)^{−e} Σ_{a ∈ (Z/p^e)^×} ψ(a/p^e) μ(a)`;
/// the conductor of `μ` must equal the level `e` of its ring.
pub fn gauss_sum_f(mu: &MultChar) -> Result<Complex64, PadicError> {
    gauss_sum_f_with(mu, Exec::default())
}

pub fn gauss_sum_f_with(mu: &MultChar, exec: Exec) -> Result<Complex64, PadicError> {
    let e = require_conductor(mu)?;
    let r = mu.ring();
    let psi = AddChar::new(r.p());
    let units = units_of(r);
    let s = sum_range(exec, units.len() as u64, |i| {
        let a = units[i as usize];
        psi.eval(a as i64, e) * mu.value(a)
    });
    Ok(s * (r.p() as f64).powf(-(e as f64) / 2.0) * mu.pi_value().powi(-(e as i32)))
}

/// `∫_{Z_p^×} ψ(p^n·c·a) μ(a) d^×a` by exhaustive averaging over
/// `(Z/p^L)^×`, `L = max(e, −n)`. The unit `c` only matters modulo `p^L`.
pub fn unit_integral(mu: &MultChar, c: i64, n: i32) -> Result<Complex64, PadicError> {
    unit_integral_with(mu, c, n, Exec::default())
}

pub fn unit_integral_with(mu: &MultChar, c: i64, n: i32, exec: Exec) -> Result<Complex64, PadicError> {
    let r = mu.ring();
    let p = r.p();
    if c.rem_euclid(p as i64) == 0 {
        return Err(PadicError::NotUnit(c.unsigned_abs()));
    }
    let level = (r.e() as i32).max(-n).max(1) as u32;
    let big = if level == r.e() { r.clone() } else { ResidueRing::new(p, level)? };
    let psi = AddChar::new(p);
    let cm = big.reduce(c);
    let units = units_of(&big);
    let s = sum_range(exec, units.len() as u64, |i| {
        let a = units[i as usize];
        let add = if n >= 0 { Complex64::new(1.0, 0.0) } else { psi.eval(big.mul(cm, a) as i64, (-n) as u32) };
        add * mu.value(a % r.modulus())
    });
    Ok(s / units.len() as f64)
}

/// Closed form of [`unit_integral`] at `c = 1`: zero unless `n = −e`, where it
/// equals `q^{−e/2+1}(q−1)^{−1} μ(p)^e W_F(μ,ψ)`.
pub fn unit_integral_closed(mu: &MultChar, n: i32) -> Result<Complex64, PadicError> {
    let e = require_conductor(mu)? as i32;
    if n != -e {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let q = mu.ring().p() as f64;
    Ok(gauss_sum_f(mu)? * q.powf(-(e as f64) / 2.0 + 1.0) / (q - 1.0) * mu.pi_value().powi(e))
}

fn check_same_level(mu: &MultChar, gr: &GaloisRing) -> Result<(), PadicError> {
    let (r, b) = (mu.ring(), gr.base());
    if r.p() != b.p() || r.e() != b.e() {
        return Err(PadicError::Precondition(format!(
            "Galois ring GR({}^{},2) does not match the character's ring Z/{}^{}",
            b.p(),
            b.e(),
            r.p(),
            r.e()
        )));
    }
    Ok(())
}

/// `W_L(μ_L,ψ_L) = q_L^{−e/2} μ_L(p)^{−e} Σ_{α ∈ GR^×} ψ(tr α/p^e) μ(N α)` with
/// `q_L = q²`, `μ_L = μ∘N` and `μ_L(p) = μ(p)²`.
pub fn gauss_sum_l(mu: &MultChar, gr: &GaloisRing) -> Result<Complex64, PadicError> {
    gauss_sum_l_with(mu, gr, Exec::default())
}

pub fn gauss_sum_l_with(mu: &MultChar, gr: &GaloisRing, exec: Exec) -> Result<Complex64, PadicError> {
    let e = require_conductor(mu)?;
    check_same_level(mu, gr)?;
    let psi = AddChar::new(gr.base().p());
    let s = sum_range(exec, gr.size(), |i| {
        let a = gr.from_index(i);
        let v = mu.value(gr.norm(a));
        if v.re == 0.0 && v.im == 0.0 {
            return v;
        }
        psi.eval(gr.trace(a) as i64, e) * v
    });
    let q = gr.base().p() as f64;
    Ok(s * q.powi(-(e as i32)) * mu.pi_value().powi(-2 * e as i32))
}

/// `∫_{o_L^×} ψ_L(c·p^n·τ) μ_L(τ) d^×τ` for `n ≥ −e`, averaged over `GR(p^e,2)^×`.
pub fn unit_integral_l(mu: &MultChar, gr: &GaloisRing, c: GElem, n: i32) -> Result<Complex64, PadicError> {
    check_same_level(mu, gr)?;
    let e = gr.base().e() as i32;
    if n < -e {
        return Err(PadicError::Precondition(format!("shift n = {n} below −e = {}", -e)));
    }
    let psi = AddChar::new(gr.base().p());
    let s = sum_range(Exec::default(), gr.size(), |i| {
        let t = gr.from_index(i);
        let v = mu.value(gr.norm(t));
        if v.re == 0.0 && v.im == 0.0 || n >= 0 {
            return v;
        }
        psi.eval(gr.trace(gr.mul(c, t)) as i64, (-n) as u32) * v
    });
    Ok(s / gr.unit_order() as f64)
}

/// `Σ_{η ∈ GR(p^e,2), u + N(η) a unit} μ(u + N(η))` for a unit `u`.
pub fn norm_char_sum(gr: &GaloisRing, mu: &MultChar, u: u64) -> Result<Complex64, PadicError> {
    norm_char_sum_with(gr, mu, u, Exec::default())
}

pub fn norm_char_sum_with(gr: &GaloisRing, mu: &MultChar, u: u64, exec: Exec) -> Result<Complex64, PadicError> {
    check_same_level(mu, gr)?;
    let b = gr.base();
    if !b.is_unit(u) {
        return Err(PadicError::NotUnit(u));
    }
    Ok(sum_range(exec, gr.size(), |i| mu.value(b.add(u, gr.norm(gr.from_index(i))))))
}

/// Closed form `(−1)^e q^e μ(u)` of [`norm_char_sum`] for `μ` of conductor `e`.
pub fn norm_char_sum_closed(mu: &MultChar, u: u64) -> Result<Complex64, PadicError> {
    let e = require_conductor(mu)? as i32;
    let q = mu.ring().p() as f64;
    Ok(mu.value(u) * q.powi(e) * if e % 2 == 0 { 1.0 } else { -1.0 })
}

/// Whether the norm maps `GR(p^e,2)^×` onto `(Z/p^e)^×` (checked by image counting).
pub fn norm_is_surjective(gr: &GaloisRing) -> bool {
    let b = gr.base();
    let mut hit = vec![false; b.modulus() as usize];
    for i in 0..gr.size() {
        let a = gr.from_index(i);
        if gr.is_unit(a) {
            hit[gr.norm(a) as usize] = true;
        }
    }
    b.units().all(|u| hit[u as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::characters_with_conductor;

    const TOL: f64 = 1e-9;

    fn pis() -> [Complex64; 3] {
        [Complex64::new(1.0, 0.0), Complex64::i(), Complex64::from_polar(1.0, 2.0)]
    }

    #[test]
    fn quadratic_gauss_sum_mod_5() {
        let r = ResidueRing::new(5, 1).unwrap();
        let chi = MultChar::new(&r, 2, Complex64::new(1.0, 0.0));
        let w = gauss_sum_f(&chi).unwrap();
        assert!((w - Complex64::new(1.0, 0.0)).norm() < TOL, "{w}");
    }

    #[test]
    fn conductor_mismatch_is_an_error() {
        let r = ResidueRing::new(5, 2).unwrap();
        let chi = MultChar::new(&r, 5, Complex64::new(1.0, 0.0));
        assert_eq!(chi.conductor(), 1);
        assert_eq!(gauss_sum_f(&chi).unwrap_err(), PadicError::ConductorMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn shift_lemma_in_window() {
        for (p, e) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2), (7, 1)] {
            let r = ResidueRing::new(p, e).unwrap();
            for pi in pis() {
                for mu in characters_with_conductor(&r, e, pi).iter().take(3) {
                    for n in (-(e as i32) - 3)..=(-(e as i32) + 3) {
                        let lhs = unit_integral(mu, 1, n).unwrap();
                        let rhs = unit_integral_closed(mu, n).unwrap();
                        assert!((lhs - rhs).norm() < TOL, "p={p} e={e} n={n}: {lhs} vs {rhs}");
                    }
                }
            }
        }
    }

    #[test]
    fn split_lemma() {
        for (p, e) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2), (7, 1)] {
            let r = ResidueRing::new(p, e).unwrap();
            let gr = GaloisRing::new(p, e).unwrap();
            for pi in pis() {
                for mu in characters_with_conductor(&r, e, pi).iter().take(3) {
                    let wf = gauss_sum_f(mu).unwrap();
                    let wl = gauss_sum_l(mu, &gr).unwrap();
                    let sign = if e % 2 == 0 { 1.0 } else { -1.0 };
                    assert!((wl - wf * wf * sign).norm() < TOL, "p={p} e={e}");
                    assert!((wl.norm() - 1.0).abs() < TOL);
                }
            }
        }
    }

    #[test]
    fn norm_sum_lemma() {
        for (p, e) in [(3u64, 1u32), (3, 2), (5, 2)] {
            let r = ResidueRing::new(p, e).unwrap();
            let gr = GaloisRing::new(p, e).unwrap();
            for mu in characters_with_conductor(&r, e, Complex64::new(1.0, 0.0)) {
                for u in r.units().take(4) {
                    let lhs = norm_char_sum(&gr, &mu, u).unwrap();
                    let rhs = norm_char_sum_closed(&mu, u).unwrap();
                    assert!((lhs - rhs).norm() < TOL, "p={p} e={e} u={u}");
                }
            }
        }
    }

    #[test]
    fn norm_surjective() {
        for (p, e) in [(3u64, 1u32), (3, 2), (5, 2), (7, 1)] {
            assert!(norm_is_surjective(&GaloisRing::new(p, e).unwrap()));
        }
    }

    #[test]
    fn galois_unit_integral_support() {
        let (p, e) = (5u64, 1u32);
        let r = ResidueRing::new(p, e).unwrap();
        let gr = GaloisRing::new(p, e).unwrap();
        let mu = MultChar::new(&r, 1, Complex64::new(1.0, 0.0));
        let one = gr.elem(1, 0);
        let v = unit_integral_l(&mu, &gr, one, -1).unwrap();
        let q = p as f64;
        let expect = gauss_sum_l(&mu, &gr).unwrap() * q.powi(-(e as i32) + 2) / (q * q - 1.0);
        assert!((v - expect).norm() < TOL);
        assert!(unit_integral_l(&mu, &gr, one, 0).unwrap().norm() < TOL);
    }
}
