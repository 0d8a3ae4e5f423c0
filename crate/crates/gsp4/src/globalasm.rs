//! Global constants: archimedean Γ-factors, the global ε-factor, the scalar
//! prefactor of the spectral average, composition of spinor L-functions of
//! lifts from GL(2) data, and truncated Euler products.
//!
//! The complex Γ-function is evaluated by the Stirling series after an upward
//! shift (and reflection for `ℜz < 1/2`); `Γ_C(s) = 2(2π)^{−s}Γ(s)`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use padicring::DirichletChar;
use serde::{Deserialize, Serialize};
use symfield::{RatFunc, Var};

use crate::localrep::spinor_lfactor;
use crate::numeric::eval_complex;
use crate::{Gsp4Error, LocalRep, RepType, Result, TwistData};

/// Distance to a non-positive integer below which Γ is treated as singular.
pub const POLE_TOL: f64 = 1e-12;

const STIRLING_SHIFT: f64 = 15.0;

/// `B_{2k} / (2k(2k−1))` for `k = 1..=10`.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn check_pole(z: Complex64) -> Result<()> {
    let n = z.re.round();
    if n <= 0.0 && (z - c(n)).norm() < POLE_TOL {
        return Err(Gsp4Error::Pole(format!("Γ has a pole at {n}")));
    }
    Ok(())
}

fn ln_gamma_large(z: Complex64) -> Complex64 {
    let zinv = z.inv();
    let zinv2 = zinv * zinv;
    let mut series = c(0.0);
    let mut pow = zinv;
    for coef in STIRLING {
        series += pow * coef;
        pow *= zinv2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series
}

/// `Γ(z)` for complex `z`; non-positive integers are poles.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    check_pole(z)?;
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        let s = (z * PI).sin();
        return Ok(c(PI) / (s * gamma(c(1.0) - z)?));
    }
    let mut w = z;
    let mut prod = c(1.0);
    while w.re < STIRLING_SHIFT {
        prod *= w;
        w += 1.0;
    }
    Ok(ln_gamma_large(w).exp() / prod)
}

/// `Γ_C(s) = 2(2π)^{−s}Γ(s)`.
pub fn gamma_c(s: Complex64) -> Result<Complex64> {
    Ok(2.0 * (-s * (2.0 * PI).ln()).exp() * gamma(s)?)
}

fn check_weight(l1: i64, l2: i64) -> Result<()> {
    if l1 < l2 || l2 < 3 || (l1 - l2) % 2 != 0 {
        return Err(Gsp4Error::InvalidParams(format!(
            "weight (l1, l2) = ({l1}, {l2}) needs l1 ≥ l2 ≥ 3 and l1 ≡ l2 mod 2"
        )));
    }
    Ok(())
}

/// `L(s, π_∞) = Γ_C(s + (l1−l2)/2 + 1/2)·Γ_C(s + (l1+l2)/2 − 3/2)`.
pub fn arch_lfactor(s: Complex64, l1: i64, l2: i64) -> Result<Complex64> {
    check_weight(l1, l2)?;
    let a = s + ((l1 - l2) / 2) as f64 + 0.5;
    let b = s + ((l1 + l2) / 2) as f64 - 1.5;
    Ok(gamma_c(a)? * gamma_c(b)?)
}

/// The Mellin exponent `σ = s + (l1+l2)/2 − 1` of the archimedean zeta integral.
pub fn mellin_exponent(s: Complex64, l1: i64, l2: i64) -> Complex64 {
    s + ((l1 + l2) / 2) as f64 - 1.0
}

/// Closed form `Γ(σ)(2π√|D|)^{−σ}` of `∫₀^∞ a^{σ−1} e^{−2π√|D| a} da`.
pub fn mellin_exponential_closed(sigma: Complex64, d: i64) -> Result<Complex64> {
    if sigma.re <= 0.0 {
        return Err(Gsp4Error::InvalidParams("the Mellin integral needs ℜσ > 0".into()));
    }
    let cst = 2.0 * PI * (d.unsigned_abs() as f64).sqrt();
    Ok(gamma(sigma)? * (-sigma * cst.ln()).exp())
}

/// `∫₀^∞ a^{σ−1} e^{−2π√|D| a} da` by double-exponential quadrature after
/// mapping `[0, ∞)` to `[0, 1)` with `a = t/(1−t)`.
pub fn mellin_exponential_quadrature(sigma: Complex64, d: i64) -> Result<Complex64> {
    if sigma.re <= 0.0 {
        return Err(Gsp4Error::InvalidParams("the Mellin integral needs ℜσ > 0".into()));
    }
    let cst = 2.0 * PI * (d.unsigned_abs() as f64).sqrt();
    let integrand = move |t: f64| -> Complex64 {
        if t <= 0.0 || t >= 1.0 {
            return c(0.0);
        }
        let a = t / (1.0 - t);
        let jac = 1.0 / ((1.0 - t) * (1.0 - t));
        ((sigma - 1.0) * a.ln() - cst * a).exp() * jac
    };
    let part = |f: &dyn Fn(f64) -> f64, tol: f64| quadrature::double_exponential::integrate(f, 0.0, 1.0, tol).integral;
    let re = |t: f64| integrand(t).re;
    let im = |t: f64| integrand(t).im;
    let rough = Complex64::new(part(&re, 1e-8), part(&im, 1e-8));
    let tol = (rough.norm() * 1e-12).max(1e-300);
    Ok(Complex64::new(part(&re, tol), part(&im, tol)))
}

/// Distinct prime factors of `n > 0`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(mut b: u64, mut k: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        k >>= 1;
    }
    r
}

/// Kronecker symbol `(d/p)` for a prime `p`: `1` split, `−1` inert, `0` ramified.
pub fn kronecker(d: i64, p: u64) -> i32 {
    if p == 2 {
        return match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    let r = d.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Global data: discriminant, weight, level, twisting character and the
/// auxiliary prime set of the spectral average.
#[derive(Clone, Debug)]
pub struct GlobalParams {
    d: i64,
    l1: i64,
    l2: i64,
    n: u64,
    m: u64,
    chi: DirichletChar,
    s_primes: Vec<u64>,
    vnorm: f64,
}

impl GlobalParams {
    /// Validates: `D` a negative fundamental discriminant; `l1 ≥ l2 ≥ 3`,
    /// `l1 ≡ l2 mod 2`; `N` squarefree; `M` odd and coprime to `N`; every
    /// prime dividing `NM` inert in `Q(√D)`; `χ` primitive of modulus `M`;
    /// `S` a set of primes coprime to `DMN`.
    pub fn new(d: i64, l1: i64, l2: i64, n: u64, chi: DirichletChar, s_primes: Vec<u64>) -> Result<GlobalParams> {
        let bad = |msg: String| Err(Gsp4Error::InvalidParams(msg));
        if !classgroup::is_fundamental(d) {
            return bad(format!("D = {d} is not a negative fundamental discriminant"));
        }
        check_weight(l1, l2)?;
        if n == 0 || prime_factors(n).into_iter().product::<u64>() != n {
            return bad(format!("N = {n} is not squarefree"));
        }
        let m = chi.modulus();
        if m.is_multiple_of(2) {
            return bad(format!("M = {m} is not odd"));
        }
        if gcd(m, n) != 1 {
            return bad(format!("M = {m} and N = {n} are not coprime"));
        }
        if !chi.is_primitive() {
            return bad(format!("the character modulo {m} is not primitive"));
        }
        if let Some(p) = prime_factors(n * m).into_iter().find(|&p| kronecker(d, p) != -1) {
            return bad(format!("{p} divides NM but is not inert in Q(√{d})"));
        }
        let dmn = d.unsigned_abs() * m * n;
        if let Some(&p) = s_primes.iter().find(|&&p| !is_prime(p) || dmn.is_multiple_of(p)) {
            return bad(format!("S contains {p}, which is not a prime coprime to DMN"));
        }
        Ok(GlobalParams { d, l1, l2, n, m, chi, s_primes, vnorm: 1.0 })
    }

    /// Set the archimedean vector-norm constant (default 1).
    pub fn with_vnorm(mut self, vnorm: f64) -> GlobalParams {
        self.vnorm = vnorm;
        self
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn weight(&self) -> (i64, i64) {
        (self.l1, self.l2)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn chi(&self) -> &DirichletChar {
        &self.chi
    }

    pub fn s_primes(&self) -> &[u64] {
        &self.s_primes
    }

    pub fn vnorm(&self) -> f64 {
        self.vnorm
    }
}

/// JSON-facing description of [`GlobalParams`] plus an evaluation point.
///
/// `chi` lists `[p, e, k]` triples: the component modulo `p^e` sends the
/// standard generator of `(Z/p^e)^×` to `e^{2πik/φ(p^e)}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct GlobalConfig {
    pub D: i64,
    pub l1: i64,
    pub l2: i64,
    pub N: u64,
    #[serde(default = "one_u64")]
    pub M: u64,
    #[serde(default)]
    pub chi: Vec<[u64; 3]>,
    #[serde(default)]
    pub S: Vec<u64>,
    pub s: [f64; 2],
    #[serde(default)]
    pub vnorm: Option<f64>,
}

fn one_u64() -> u64 {
    1
}

impl GlobalConfig {
    pub fn params(&self) -> Result<GlobalParams> {
        let data: Vec<(u64, u32, u64)> = self.chi.iter().map(|&[p, e, k]| (p, e as u32, k)).collect();
        let chi = DirichletChar::from_indices(&data)?;
        if chi.modulus() != self.M {
            return Err(Gsp4Error::InvalidParams(format!(
                "character modulus {} differs from M = {}",
                chi.modulus(),
                self.M
            )));
        }
        let gp = GlobalParams::new(self.D, self.l1, self.l2, self.N, chi, self.S.clone())?;
        Ok(gp.with_vnorm(self.vnorm.unwrap_or(1.0)))
    }

    pub fn point(&self) -> Complex64 {
        Complex64::new(self.s[0], self.s[1])
    }
}

/// `ε(s, π, μ) = (−1)^{l2} μ̃(N_π²) (G(μ̃)/√M)⁴ (M⁴N_π²)^{1/2−s}`, with the
/// Gauss sum computed prime-power by prime-power.
pub fn global_epsilon(s: Complex64, gp: &GlobalParams, npi: u64) -> Result<Complex64> {
    if npi == 0 || !gp.n.is_multiple_of(npi) {
        return Err(Gsp4Error::InvalidParams(format!("N_π = {npi} does not divide N = {}", gp.n)));
    }
    let sign = if gp.l2 % 2 == 0 { 1.0 } else { -1.0 };
    let m = gp.m as f64;
    let g = gp.chi.gauss_sum_crt() / m.sqrt();
    let base = m.powi(4) * (npi as f64).powi(2);
    let chi_n = gp.chi.value((npi * npi) as i64);
    Ok(sign * chi_n * g.powi(4) * ((0.5 - s) * base.ln()).exp())
}

/// `[K_f : K₀(N)] = Π_{p|N} p³(1+p⁻¹)(1+p⁻²) = Π_{p|N} (p+1)(p²+1)`.
pub fn siegel_index(n: u64) -> u64 {
    prime_factors(n).into_iter().map(|p| (p + 1) * (p * p + 1)).product()
}

/// `ζ_M(s) = Π_{p|M} (1 − p^{−s})^{−1}` at real `s`.
pub fn zeta_m(m: u64, s: f64) -> f64 {
    prime_factors(m).into_iter().map(|p| 1.0 / (1.0 - (p as f64).powf(-s))).product()
}

/// One named factor of the spectral-average prefactor.
#[derive(Clone, Debug, Serialize)]
pub struct NamedConstant {
    pub name: &'static str,
    pub formula: &'static str,
    pub value: Complex64,
}

/// The scalar multiplying the spectral sum, with its factors.
#[derive(Clone, Debug, Serialize)]
pub struct AveragePrefactor {
    pub total: Complex64,
    pub factors: Vec<NamedConstant>,
}

/// `2⁻²|D|^{(3−(l1+l2)/2)/2} e^{−2π√|D|} / (w_D² [K_f:K₀(N)])
///  · M^{s−6} ζ_M(1) ζ_M(4) μ̃(2D) G(μ̃) · N^{s−1} μ̃(N)⁻¹ Π_{p|N}(1+p⁻²)⁻¹
///  · (v|v)²`.
pub fn average_prefactor(s: Complex64, gp: &GlobalParams) -> Result<AveragePrefactor> {
    let ad = gp.d.unsigned_abs() as f64;
    let w = classgroup::w_d(gp.d) as f64;
    let k = (gp.l1 + gp.l2) as f64 / 2.0;
    let (m, n) = (gp.m as f64, gp.n as f64);
    let chi_n = gp.chi.value(gp.n as i64);
    let factors = vec![
        NamedConstant {
            name: "archimedean",
            formula: "2^-2 |D|^((3-(l1+l2)/2)/2) exp(-2 pi sqrt|D|)",
            value: c(0.25 * ad.powf(0.5 * (3.0 - k)) * (-2.0 * PI * ad.sqrt()).exp()),
        },
        NamedConstant { name: "units", formula: "w_D^-2", value: c(1.0 / (w * w)) },
        NamedConstant { name: "index", formula: "[K_f : K_0(N)]^-1", value: c(1.0 / siegel_index(gp.n) as f64) },
        NamedConstant { name: "conductor_power", formula: "M^(s-6)", value: ((s - 6.0) * m.ln()).exp() },
        NamedConstant { name: "zeta_M", formula: "zeta_M(1) zeta_M(4)", value: c(zeta_m(gp.m, 1.0) * zeta_m(gp.m, 4.0)) },
        NamedConstant { name: "character_at_2D", formula: "mu~(2D)", value: gp.chi.value(2 * gp.d) },
        NamedConstant { name: "gauss_sum", formula: "G(mu~)", value: gp.chi.gauss_sum_crt() },
        NamedConstant { name: "level_power", formula: "N^(s-1)", value: ((s - 1.0) * n.ln()).exp() },
        NamedConstant { name: "character_at_N", formula: "mu~(N)^-1", value: chi_n.inv() },
        NamedConstant {
            name: "level_euler",
            formula: "prod_{p|N} (1+p^-2)^-1",
            value: c(prime_factors(gp.n).into_iter().map(|p| 1.0 / (1.0 + (p as f64).powi(-2))).product()),
        },
        NamedConstant { name: "vector_norm", formula: "(v|v)^2", value: c(gp.vnorm * gp.vnorm) },
    ];
    let total = factors.iter().fold(c(1.0), |acc, f| acc * f.value);
    Ok(AveragePrefactor { total, factors })
}

/// Spinor L-values of lifts expressed through supplied GL(2) data.
#[derive(Clone, Debug, PartialEq)]
pub enum CompositeInput {
    /// `L̂(s, π₀×μ)`, `L̂(s+1/2, μ)`, `L̂(s−1/2, μ)`.
    SaitoKurokawa { l_pi0: Option<Complex64>, l_mu_plus: Option<Complex64>, l_mu_minus: Option<Complex64> },
    /// `L̂(s, π₁×μ)`, `L̂(s, π₂×μ)`.
    Yoshida { l_pi1: Option<Complex64>, l_pi2: Option<Complex64> },
}

fn need(v: Option<Complex64>, what: &str) -> Result<Complex64> {
    v.ok_or_else(|| Gsp4Error::MissingData(what.to_string()))
}

/// `L̂(s, π, μ)` for a Saito–Kurokawa lift,
/// `(4π)⁻¹(s−1/2) L̂(s,π₀×μ) L̂(s+1/2,μ) L̂(s−1/2,μ)`, or a Yoshida lift,
/// `L̂(s,π₁×μ) L̂(s,π₂×μ)`.
pub fn composite_lfactor(input: &CompositeInput, s: Complex64) -> Result<Complex64> {
    match *input {
        CompositeInput::SaitoKurokawa { l_pi0, l_mu_plus, l_mu_minus } => {
            let a = need(l_pi0, "L(s, pi_0 x mu)")?;
            let b = need(l_mu_plus, "L(s+1/2, mu)")?;
            let d = need(l_mu_minus, "L(s-1/2, mu)")?;
            Ok((s - 0.5) / (4.0 * PI) * a * b * d)
        }
        CompositeInput::Yoshida { l_pi1, l_pi2 } => {
            Ok(need(l_pi1, "L(s, pi_1 x mu)")? * need(l_pi2, "L(s, pi_2 x mu)")?)
        }
    }
}

/// Local data at one prime: representation (possibly symbolic), numeric
/// values for its symbols, and the unramified twist value `μ_p(p)`.
#[derive(Clone, Debug)]
pub struct LocalEntry {
    pub rep: LocalRep,
    pub env: Vec<(Var, Complex64)>,
    pub u: Complex64,
}

/// Finite-prime local data together with the archimedean weight.
#[derive(Clone, Debug)]
pub struct LocalDataMap {
    pub weight: (i64, i64),
    pub primes: BTreeMap<u64, LocalEntry>,
}

impl LocalDataMap {
    pub fn new(weight: (i64, i64)) -> LocalDataMap {
        LocalDataMap { weight, primes: BTreeMap::new() }
    }

    pub fn insert(&mut self, p: u64, entry: LocalEntry) {
        self.primes.insert(p, entry);
    }

    /// Primes dividing `N` carry IIIa or VIb; the others I or IIb.
    pub fn validate(&self, gp: &GlobalParams) -> Result<()> {
        if self.weight != gp.weight() {
            return Err(Gsp4Error::InvalidParams("archimedean weight differs from the global weight".into()));
        }
        for (&p, entry) in &self.primes {
            if !is_prime(p) {
                return Err(Gsp4Error::InvalidParams(format!("{p} is not prime")));
            }
            let at_level = gp.n.is_multiple_of(p);
            if at_level == entry.rep.tag().is_spherical() {
                return Err(Gsp4Error::InvalidParams(format!(
                    "type {} at p = {p} does not match the level N = {}",
                    entry.rep.tag(),
                    gp.n
                )));
            }
        }
        Ok(())
    }
}

/// A truncated Euler product: no analytic continuation is attempted.
#[derive(Clone, Debug, Serialize)]
pub struct PartialL {
    pub value: Complex64,
    pub primes: Vec<u64>,
    pub label: String,
}

fn local_value(p: u64, entry: &LocalEntry, s: Complex64, gp: &GlobalParams) -> Result<Complex64> {
    if gp.m.is_multiple_of(p) {
        // The twist is ramified at p: the local factor is 1.
        return Ok(c(1.0));
    }
    let f = spinor_lfactor(&entry.rep, &TwistData::unramified(RatFunc::var(Var::U), RatFunc::one()))?;
    let pf = p as f64;
    let mut env = entry.env.clone();
    env.push((Var::Q, c(pf.sqrt())));
    env.push((Var::T, (-s * pf.ln()).exp()));
    env.push((Var::U, entry.u));
    eval_complex(&f, &env)
}

/// `Π_{p ∈ data} L(s, (π_μ)_p) · L(s, π_∞)`, parallel across primes when the
/// `parallel` feature is on; factors are multiplied in ascending prime order.
pub fn partial_spinor_l(s: Complex64, data: &LocalDataMap, gp: &GlobalParams) -> Result<PartialL> {
    data.validate(gp)?;
    let entries: Vec<(u64, &LocalEntry)> = data.primes.iter().map(|(p, e)| (*p, e)).collect();
    #[cfg(feature = "parallel")]
    let locals: Vec<Result<Complex64>> = {
        use rayon::prelude::*;
        entries.par_iter().map(|(p, e)| local_value(*p, e, s, gp)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let locals: Vec<Result<Complex64>> = entries.iter().map(|(p, e)| local_value(*p, e, s, gp)).collect();
    let mut value = arch_lfactor(s, data.weight.0, data.weight.1)?;
    for l in locals {
        value *= l?;
    }
    let primes: Vec<u64> = entries.iter().map(|(p, _)| *p).collect();
    let label = format!("partial Euler product over primes {primes:?} times the archimedean factor");
    Ok(PartialL { value, primes, label })
}

/// Convenience: `LocalEntry` for a type-I or IIb representation with the
/// given numeric parameters.
pub fn spherical_entry(tag: RepType, params: &[(Var, Complex64)], u: Complex64) -> Result<LocalEntry> {
    if !tag.is_spherical() {
        return Err(Gsp4Error::Unsupported { op: "spherical_entry", tag });
    }
    Ok(LocalEntry { rep: LocalRep::symbolic(tag), env: params.to_vec(), u })
}
