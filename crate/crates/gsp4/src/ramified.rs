//! Zeta integrals of the spherical Bessel function against a ramified twist μ
//! of conductor `e`, with `L/F` inert and Λ unramified.
//!
//! Two test functions are treated: `φ = 1_{p^e o_L ⊕ (1 + p^e o_L)}` and its
//! Fourier transform `φ̂`. Each zeta integral is evaluated
//!
//! * in closed form, through the root numbers `W_F(μ,ψ)` and `W_L(μ_L,ψ_L)`:
//!   `Z(φ) = q^{e(s−11/2)+5}(q⁴−1)⁻¹(q−1)⁻¹ μ(−d/2)⁻¹ W_F`,
//!   `Z(φ̂) = (−1)^e q^{e(3s−11/2)+5}(q⁴−1)⁻¹(q−1)⁻¹ λ^{−e} μ(−a²/2) W_L W_F`;
//! * numerically, as the finite coset sum
//!   `q^{−2e+2}(q²+1)⁻¹ Σ_k f(k) I(k)` over the representatives
//!   `[1 0; ξ 1]` (`ξ ∈ p o_L / p^e`) and `[0 −1; 1 η†]` (`η ∈ o_L / p^e`),
//!   where `f` is the section attached to the test function (computed by
//!   exhaustive averaging over `GR(p^e,2)^×`) and `I(k)` the torus integral of
//!   the Bessel function, reduced to diagonal values `B⁰(h(l,0))` (from the
//!   generating series) times character integrals over `Z_p^×`.
//!
//! Terms that would need Bessel values `B(h(l,m))` with `m > 0` are only ever
//! multiplied by character integrals that vanish; the numeric route checks
//! that they do and refuses to continue otherwise.

use num_complex::Complex64;
use padicring::{gauss_sum_f, gauss_sum_l, unit_integral, unit_integral_l, GElem, GaloisRing, MultChar, ResidueRing, SymForm};
use symfield::Var;

use crate::besselzeta::diag_values;
use crate::localrep::LocalRep;
use crate::numeric::{eval_complex, Env};
use crate::{Gsp4Error, Result};

/// How far past the single contributing shift the numeric sums extend.
pub const WINDOW: i32 = 3;

/// Numerically zero.
const ZERO_TOL: f64 = 1e-12;

/// `S = [[a, b/2], [b/2, c]]`, the prime `p`, the twist μ (on `Z/p^e`, with
/// `μ(ϖ)` stored in the character) and `λ = Λ(ϖ)`.
#[derive(Clone, Debug)]
pub struct RamifiedSetup {
    form: SymForm,
    mu: MultChar,
    lambda: Complex64,
    gr: GaloisRing,
}

/// The pair `(Z(φ), Z(φ̂))` at one `s`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RamifiedZeta {
    pub z_phi: Complex64,
    pub z_phihat: Complex64,
}

impl RamifiedSetup {
    /// Requires `a` and `d/2` units at `p`, `d` a non-residue (`L/F` inert)
    /// and μ of exact conductor `e` (the level of its ring).
    pub fn new(form: SymForm, mu: MultChar, lambda: Complex64) -> Result<RamifiedSetup> {
        let ring = mu.ring();
        let (p, e) = (ring.p(), ring.e());
        let pi = p as i128;
        if (form.a as i128) % pi == 0 {
            return Err(Gsp4Error::InvalidParams(format!("a = {} is not a unit at p = {p}", form.a)));
        }
        let d = form.disc();
        if d % pi == 0 {
            return Err(Gsp4Error::InvalidParams(format!("d/2 = {d}/2 is not a unit at p = {p}")));
        }
        if mu.conductor() != e {
            return Err(Gsp4Error::InvalidParams(format!(
                "μ has conductor {} but the ring has level {e}",
                mu.conductor()
            )));
        }
        let delta = i64::try_from(d).map_err(|_| Gsp4Error::InvalidParams("discriminant too large".into()))?;
        let gr = GaloisRing::with_delta(p, e, delta)
            .map_err(|_| Gsp4Error::InvalidParams(format!("d = {d} is a square mod {p}: L/F is not inert")))?;
        Ok(RamifiedSetup { form, mu, lambda, gr })
    }

    pub fn form(&self) -> SymForm {
        self.form
    }

    pub fn mu(&self) -> &MultChar {
        &self.mu
    }

    pub fn lambda(&self) -> Complex64 {
        self.lambda
    }

    pub fn p(&self) -> u64 {
        self.mu.ring().p()
    }

    pub fn e(&self) -> u32 {
        self.mu.ring().e()
    }

    fn q(&self) -> f64 {
        self.p() as f64
    }

    /// The same data with μ replaced by μ̄.
    pub fn conj(&self) -> RamifiedSetup {
        RamifiedSetup { mu: self.mu.conj(), ..self.clone() }
    }

    fn d(&self) -> i64 {
        self.form.disc() as i64
    }
}

fn qpow(q: f64, z: Complex64) -> Complex64 {
    (z * q.ln()).exp()
}

/// Closed forms of `Z(φ)` and `Z(φ̂)` at `s`.
pub fn zeta_case2_3_closed(setup: &RamifiedSetup, s: Complex64) -> Result<RamifiedZeta> {
    let (q, e) = (setup.q(), setup.e() as f64);
    let mu = setup.mu();
    let wf = gauss_sum_f(mu)?;
    let wl = gauss_sum_l(mu, &setup.gr)?;
    let common = 1.0 / ((q.powi(4) - 1.0) * (q - 1.0));
    let z_phi = qpow(q, e * (s - 5.5) + 5.0) * common / mu.value_rational(-setup.d(), 2)? * wf;
    let a = setup.form.a;
    let sign = if setup.e().is_multiple_of(2) { 1.0 } else { -1.0 };
    let z_phihat = sign
        * qpow(q, e * (3.0 * s - 5.5) + 5.0)
        * common
        * setup.lambda.powi(-(setup.e() as i32))
        * mu.value_rational(-a * a, 2)?
        * wl
        * wf;
    Ok(RamifiedZeta { z_phi, z_phihat })
}

/// `ε(π, s, μ, ψ) = q^{4e(1/2−s)} λ^{−e} μ(−a⁻²d) conj(W_F(μ,ψ))⁴`.
pub fn epsilon_closed(setup: &RamifiedSetup, s: Complex64) -> Result<Complex64> {
    let e = setup.e() as f64;
    let a = setup.form.a;
    let wf = gauss_sum_f(setup.mu())?;
    Ok(qpow(setup.q(), 4.0 * e * (0.5 - s))
        * setup.lambda.powi(-(setup.e() as i32))
        * setup.mu().value_rational(-setup.d(), a * a)?
        * wf.conj().powi(4))
}

/// `ε(π, s+1/2, μ, ψ)` through the local functional equation, as the ratio
/// `Z(φ̂, −s, μ̄) / Z(φ, s, μ)` of coset-sum values (both L-factors are 1 for
/// ramified μ).
pub fn epsilon_from_zetas(rep: &LocalRep, env: &Env, setup: &RamifiedSetup, s: Complex64) -> Result<Complex64> {
    let num = zeta_case2_3_numeric(rep, env, &setup.conj(), -s)?.z_phihat;
    let den = zeta_case2_3_numeric(rep, env, setup, s)?.z_phi;
    Ok(num / den)
}

// `num/den` as a residue mod `p^level` (`den` a unit).
fn residue(num: i128, den: i128, ring: &ResidueRing) -> Result<i64> {
    let m = ring.modulus() as i128;
    let n = num.rem_euclid(m) as u64;
    let d = ring.inv(den.rem_euclid(m) as u64)?;
    Ok(ring.mul(n, d) as i64)
}

// Coset representative `[a b; c d]` over `o_L / p^e`.
#[derive(Clone, Copy, Debug)]
struct Rep {
    c: GElem,
    d: GElem,
    /// `η` for the representatives `[0 −1; 1 η†]`.
    eta: Option<GElem>,
}

fn representatives(gr: &GaloisRing) -> Vec<Rep> {
    let r = gr.base();
    let (p, m) = (r.p(), r.modulus());
    let one = gr.elem(1, 0);
    let mut reps = Vec::new();
    let step = m / p;
    for i in 0..step * step {
        let xi = gr.elem(((i % step) * p) as i64, ((i / step) * p) as i64);
        reps.push(Rep { c: xi, d: one, eta: None });
    }
    for i in 0..gr.size() {
        let eta = gr.from_index(i);
        reps.push(Rep { c: one, d: gr.frobenius(eta), eta: Some(eta) });
    }
    reps
}

/// `f_φ(k) = μ(det k) ∫ 1_{p^e}(cτ†) 1_{1+p^e}(dτ†) Λμ_L(τ)|ττ†|^{s+1} d^×τ`;
/// since `c` or `d` is a unit for every representative only `τ ∈ o_L^×`
/// contributes, and the integral is an average over `GR(p^e,2)^×`. All
/// representatives have determinant 1.
fn f_phi(setup: &RamifiedSetup, k: &Rep) -> Complex64 {
    let gr = &setup.gr;
    let zero = gr.elem(0, 0);
    let one = gr.elem(1, 0);
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..gr.size() {
        let tau = gr.from_index(i);
        if !gr.is_unit(tau) {
            continue;
        }
        let tb = gr.frobenius(tau);
        if gr.mul(k.c, tb) == zero && gr.mul(k.d, tb) == one {
            acc += setup.mu.value(gr.norm(tau));
        }
    }
    acc / gr.unit_order() as f64
}

/// `f_φ̂(k) = q^{−4e} μ(det k) Σ_{n ≥ −e} (λu²)^n q^{−2n(s+1)} ∫_{o_L^×} ψ_L(c ϖ^n τ) μ_L(τ) d^×τ`,
/// truncated at `n = WINDOW` (for `n ≥ 0` the integral of the ramified μ_L vanishes).
fn f_phihat(setup: &RamifiedSetup, k: &Rep, s: Complex64) -> Result<Complex64> {
    let (q, e) = (setup.q(), setup.e() as i32);
    let u = setup.mu.pi_value();
    let mut acc = Complex64::new(0.0, 0.0);
    for n in -e..=WINDOW {
        let integral = unit_integral_l(&setup.mu, &setup.gr, k.c, n)?;
        if integral.norm() < ZERO_TOL {
            continue;
        }
        acc += (setup.lambda * u * u).powi(n) * qpow(q, -2.0 * n as f64 * (s + 1.0)) * integral;
    }
    Ok(acc * q.powi(-4 * e))
}

/// Numeric diagonal Bessel values `B⁰(h(l,0))`, `l = 0..=n`.
fn diag_numeric(rep: &LocalRep, env: &Env, p: u64, n: usize) -> Result<Vec<Complex64>> {
    let mut full: Vec<(Var, Complex64)> = vec![(Var::Q, Complex64::new((p as f64).sqrt(), 0.0))];
    full.extend_from_slice(env);
    diag_values(rep, n)?.iter().map(|f| eval_complex(f, &full)).collect()
}

/// `I(k) = ∫_{F^×} B⁰(m(a,a) ι(k) b) μ(a) |a|^{s−1} d^×a` as a sum over `a = ϖ^n a₀`.
///
/// For `k = 1`: `Σ_n B⁰(h(e+n,0)) u^n q^{−n(s−1)} ∫ ψ(ϖ^n·(−d/2)·a₀) μ(a₀)`.
/// For `k = [0 −1; 1 η†]`: with `a⁶d/4 + N(η) = ϖ^j w`,
/// `Σ_n B⁰(h(e+n−2j, j)) u^n q^{−n(s−1)} ∫ ψ(−ϖ^{n−j} a₀ (a⁴d/2) w⁻¹) μ(a₀)`.
fn torus_integral(setup: &RamifiedSetup, k: &Rep, bvals: &[Complex64], s: Complex64) -> Result<Complex64> {
    let (p, e) = (setup.p(), setup.e() as i32);
    let q = setup.q();
    let u = setup.mu.pi_value();
    let (a, d) = (setup.form.a as i128, setup.form.disc());
    let (j, num, den) = match k.eta {
        None => (0, -d, 2i128),
        Some(eta) => {
            // Integer lift of a⁶d + 4N(η) = 4ϖ^j w, N(η) = x² − d·y².
            let (x, y) = (eta.x as i128, eta.y as i128);
            let v = a.pow(6) * d + 4 * (x * x - d * y * y);
            let t = if v == 0 { u32::MAX } else { padicring::ord_p(v, p) };
            if t >= setup.e() {
                // Capped: a lift of η with ord exactly e and w = 1 exists.
                (e, -a.pow(4) * d, 2)
            } else {
                let w4 = v / (p as i128).pow(t);
                (t as i32, -a.pow(4) * d * 4, 2 * w4)
            }
        }
    };
    let mut acc = Complex64::new(0.0, 0.0);
    for n in (-e - WINDOW)..=WINDOW {
        let l = e + n - 2 * j;
        if l < 0 {
            continue; // support condition
        }
        let shift = n - j;
        let level = (e).max(-shift).max(1) as u32;
        let ring = ResidueRing::new(p, level)?;
        let c = residue(num, den, &ring)?;
        let integral = unit_integral(&setup.mu, c, shift)?;
        if integral.norm() < ZERO_TOL {
            continue;
        }
        if j > 0 {
            return Err(Gsp4Error::MissingData(format!("Bessel value at h({l}, {j}) with nonzero weight")));
        }
        let b = bvals
            .get(l as usize)
            .copied()
            .ok_or_else(|| Gsp4Error::MissingData(format!("diagonal Bessel value at l = {l}")))?;
        acc += b * u.powi(n) * qpow(q, -(n as f64) * (s - 1.0)) * integral;
    }
    Ok(acc)
}

/// Coset-sum evaluation of `(Z(φ), Z(φ̂))` for a spherical representation
/// whose Satake parameters (and any other symbols) take the values in `env`.
pub fn zeta_case2_3_numeric(rep: &LocalRep, env: &Env, setup: &RamifiedSetup, s: Complex64) -> Result<RamifiedZeta> {
    if !rep.tag().is_spherical() {
        return Err(Gsp4Error::Unsupported { op: "zeta_case2_3_numeric", tag: rep.tag() });
    }
    let (q, e) = (setup.q(), setup.e() as i32);
    let bvals = diag_numeric(rep, env, setup.p(), (2 * e + 2 * WINDOW) as usize)?;
    let pre = q.powi(-2 * e + 2) / (q * q + 1.0);
    let mut z_phi = Complex64::new(0.0, 0.0);
    let mut z_phihat = Complex64::new(0.0, 0.0);
    for k in representatives(&setup.gr) {
        let f = f_phi(setup, &k);
        let fh = f_phihat(setup, &k, s)?;
        if f.norm() < ZERO_TOL && fh.norm() < ZERO_TOL {
            continue;
        }
        if k.eta.is_none() && k.c != setup.gr.elem(0, 0) {
            return Err(Gsp4Error::MissingData("torus integral at a lower-unipotent representative".into()));
        }
        let i = torus_integral(setup, &k, &bvals, s)?;
        z_phi += f * i;
        z_phihat += fh * i;
    }
    Ok(RamifiedZeta { z_phi: z_phi * pre, z_phihat: z_phihat * pre })
}
