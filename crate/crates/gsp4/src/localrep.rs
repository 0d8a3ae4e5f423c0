//! The four Iwahori-spherical representation types and their closed-form
//! invariants: spinor and standard L-factors, central characters, local
//! ε-factors and the spectral-average t-factor.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use symfield::{q, qh, RatFunc, Var};

use crate::besselzeta::hecke_matrices;
use crate::numeric::{eval_at_sqrt, eval_complex, QuadSurd};
use crate::{Gsp4Error, Result};

/// Representation type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RepType {
    I,
    IIb,
    IIIa,
    VIb,
}

impl RepType {
    pub const ALL: [RepType; 4] = [RepType::I, RepType::IIb, RepType::IIIa, RepType::VIb];

    /// `(dim V^K, dim V^{K₀(p)})`.
    pub fn dims(self) -> (usize, usize) {
        match self {
            RepType::I => (1, 4),
            RepType::IIb => (1, 3),
            RepType::IIIa => (0, 2),
            RepType::VIb => (0, 1),
        }
    }

    /// Has a nonzero `GSp₄(o)`-fixed vector.
    pub fn is_spherical(self) -> bool {
        matches!(self, RepType::I | RepType::IIb)
    }

    /// Names of the Satake parameters present for this type.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            RepType::I => &["alpha", "beta", "gamma"],
            RepType::IIb | RepType::IIIa => &["alpha", "gamma"],
            RepType::VIb => &["gamma"],
        }
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::I => "I",
            RepType::IIb => "IIb",
            RepType::IIIa => "IIIa",
            RepType::VIb => "VIb",
        })
    }
}

impl FromStr for RepType {
    type Err = Gsp4Error;

    fn from_str(s: &str) -> Result<RepType> {
        RepType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Gsp4Error::InvalidParams(format!("unknown representation type `{s}`")))
    }
}

/// A representation of one of the four types with its Satake parameters
/// (symbolic or specialized).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalRep {
    tag: RepType,
    alpha: Option<RatFunc>,
    beta: Option<RatFunc>,
    gamma: RatFunc,
}

impl LocalRep {
    /// Parameters must be present exactly for the type (I: α, β, γ; IIb and
    /// IIIa: α, γ; VIb: γ).
    pub fn new(tag: RepType, alpha: Option<RatFunc>, beta: Option<RatFunc>, gamma: RatFunc) -> Result<LocalRep> {
        let want_alpha = tag != RepType::VIb;
        let want_beta = tag == RepType::I;
        if alpha.is_some() != want_alpha || beta.is_some() != want_beta {
            return Err(Gsp4Error::InvalidParams(format!(
                "type {tag} takes parameters {}",
                tag.params().join(", ")
            )));
        }
        for p in alpha.iter().chain(beta.iter()).chain(std::iter::once(&gamma)) {
            if p.is_zero() {
                return Err(Gsp4Error::InvalidParams("Satake parameters are nonzero".into()));
            }
        }
        Ok(LocalRep { tag, alpha, beta, gamma })
    }

    pub fn type_i(alpha: RatFunc, beta: RatFunc, gamma: RatFunc) -> Result<LocalRep> {
        LocalRep::new(RepType::I, Some(alpha), Some(beta), gamma)
    }

    pub fn type_iib(alpha: RatFunc, gamma: RatFunc) -> Result<LocalRep> {
        LocalRep::new(RepType::IIb, Some(alpha), None, gamma)
    }

    pub fn type_iiia(alpha: RatFunc, gamma: RatFunc) -> Result<LocalRep> {
        LocalRep::new(RepType::IIIa, Some(alpha), None, gamma)
    }

    pub fn type_vib(gamma: RatFunc) -> Result<LocalRep> {
        LocalRep::new(RepType::VIb, None, None, gamma)
    }

    /// Fully symbolic parameters `A, B, G`.
    pub fn symbolic(tag: RepType) -> LocalRep {
        let a = RatFunc::var(Var::A);
        let b = RatFunc::var(Var::B);
        let g = RatFunc::var(Var::G);
        match tag {
            RepType::I => LocalRep { tag, alpha: Some(a), beta: Some(b), gamma: g },
            RepType::IIb | RepType::IIIa => LocalRep { tag, alpha: Some(a), beta: None, gamma: g },
            RepType::VIb => LocalRep { tag, alpha: None, beta: None, gamma: g },
        }
    }

    /// Symbolic parameters with trivial central character imposed:
    /// I: α = β⁻¹γ⁻²; IIb: γ = α⁻¹; IIIa: α = γ⁻²; VIb: γ = 1.
    pub fn symbolic_trivial_central(tag: RepType) -> LocalRep {
        let a = RatFunc::var(Var::A);
        let b = RatFunc::var(Var::B);
        let g = RatFunc::var(Var::G);
        let inv = |f: &RatFunc| f.inv().expect("nonzero variable");
        match tag {
            RepType::I => {
                let alpha = inv(&(&b * &g * &g));
                LocalRep { tag, alpha: Some(alpha), beta: Some(b), gamma: g }
            }
            RepType::IIb => LocalRep { tag, gamma: inv(&a), alpha: Some(a), beta: None },
            RepType::IIIa => LocalRep { tag, alpha: Some(inv(&(&g * &g))), beta: None, gamma: g },
            RepType::VIb => LocalRep { tag, alpha: None, beta: None, gamma: RatFunc::one() },
        }
    }

    pub fn tag(&self) -> RepType {
        self.tag
    }

    pub fn alpha(&self) -> Result<&RatFunc> {
        self.alpha.as_ref().ok_or_else(|| Gsp4Error::MissingData(format!("type {} has no α", self.tag)))
    }

    pub fn beta(&self) -> Result<&RatFunc> {
        self.beta.as_ref().ok_or_else(|| Gsp4Error::MissingData(format!("type {} has no β", self.tag)))
    }

    pub fn gamma(&self) -> &RatFunc {
        &self.gamma
    }

    /// `(name, value)` for the parameters present.
    pub fn params(&self) -> Vec<(&'static str, &RatFunc)> {
        let mut out = Vec::new();
        if let Some(a) = &self.alpha {
            out.push(("alpha", a));
        }
        if let Some(b) = &self.beta {
            out.push(("beta", b));
        }
        out.push(("gamma", &self.gamma));
        out
    }

    /// Central character at `ϖ`: I: αβγ², IIb: α²γ², IIIa: αγ², VIb: γ².
    pub fn central_character(&self) -> RatFunc {
        let g2 = &self.gamma * &self.gamma;
        match self.tag {
            RepType::I => self.alpha.as_ref().unwrap() * self.beta.as_ref().unwrap() * g2,
            RepType::IIb => {
                let a = self.alpha.as_ref().unwrap();
                a * a * g2
            }
            RepType::IIIa => self.alpha.as_ref().unwrap() * g2,
            RepType::VIb => g2,
        }
    }

    pub fn has_trivial_central_character(&self) -> bool {
        self.central_character().is_one()
    }

    pub fn require_trivial_central_character(&self, op: &str) -> Result<()> {
        if self.has_trivial_central_character() {
            Ok(())
        } else {
            Err(Gsp4Error::InvalidParams(format!(
                "{op} needs trivial central character; here it is {}",
                self.central_character()
            )))
        }
    }

    /// Parameters that are rational constants off the unit circle.
    pub fn non_unitary_params(&self) -> Vec<&'static str> {
        self.params()
            .into_iter()
            .filter(|(_, v)| v.as_rational().is_some_and(|r| r.abs() != num_rational::BigRational::from_integer(1.into())))
            .map(|(n, _)| n)
            .collect()
    }

    /// Metadata note for non-unitary numeric inputs (accepted, not rejected).
    pub fn unitarity_note(&self) -> Option<String> {
        let bad = self.non_unitary_params();
        (!bad.is_empty()).then(|| format!("non-unitary Satake parameter(s): {}", bad.join(", ")))
    }

    /// Complex conjugate under the unit-circle convention (`x̄ = x⁻¹`).
    /// Rejects rational parameters off the unit circle.
    pub fn conj(&self) -> Result<LocalRep> {
        let bad = self.non_unitary_params();
        if !bad.is_empty() {
            return Err(Gsp4Error::NonUnitary(bad.join(", ")));
        }
        let inv = |f: &RatFunc| f.inv().map_err(Gsp4Error::from);
        Ok(LocalRep {
            tag: self.tag,
            alpha: self.alpha.as_ref().map(inv).transpose()?,
            beta: self.beta.as_ref().map(inv).transpose()?,
            gamma: inv(&self.gamma)?,
        })
    }

    /// Substitute into every parameter.
    pub fn subst(&self, bindings: &[(Var, RatFunc)]) -> Result<LocalRep> {
        let s = |f: &RatFunc| f.subst(bindings).map_err(Gsp4Error::from);
        LocalRep::new(
            self.tag,
            self.alpha.as_ref().map(s).transpose()?,
            self.beta.as_ref().map(s).transpose()?,
            s(&self.gamma)?,
        )
    }
}

/// Twist data: `u = μ(ϖ)`, `λ = Λ(ϖ)` and the conductor exponent `e` of μ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData {
    pub u: RatFunc,
    pub lambda: RatFunc,
    pub e: u32,
}

impl TwistData {
    /// Unramified twist with symbolic `U`, `L`.
    pub fn symbolic() -> TwistData {
        TwistData { u: RatFunc::var(Var::U), lambda: RatFunc::var(Var::L), e: 0 }
    }

    pub fn unramified(u: RatFunc, lambda: RatFunc) -> TwistData {
        TwistData { u, lambda, e: 0 }
    }

    /// `μ = 1`, `Λ = 1`.
    pub fn trivial() -> TwistData {
        TwistData::unramified(RatFunc::one(), RatFunc::one())
    }

    /// Ramified twist of conductor exponent `e > 0`, symbolic `U`, `L`.
    pub fn ramified(e: u32) -> TwistData {
        TwistData { u: RatFunc::var(Var::U), lambda: RatFunc::var(Var::L), e }
    }

    pub fn require_unramified(&self) -> Result<()> {
        if self.e > 0 {
            Err(Gsp4Error::RamifiedTwist(self.e))
        } else {
            Ok(())
        }
    }
}

fn one_minus(x: RatFunc) -> RatFunc {
    RatFunc::one() - x
}

fn inv_product(factors: Vec<RatFunc>) -> Result<RatFunc> {
    let den = factors.into_iter().fold(RatFunc::one(), |acc, f| acc * f);
    den.inv().map_err(|_| Gsp4Error::Degenerate("an Euler factor vanishes identically".into()))
}

/// `L(s, π, μ)` as a function of `T = q^{−s}`; the twist scales `T ↦ u·T`.
/// Ramified twists are rejected (the factor is 1 by convention; callers wanting
/// that constant use [`RatFunc::one`]).
pub fn spinor_lfactor(rep: &LocalRep, twist: &TwistData) -> Result<RatFunc> {
    twist.require_unramified()?;
    let t = &twist.u * RatFunc::var(Var::T);
    let g = rep.gamma();
    let factors = match rep.tag() {
        RepType::I => {
            let (a, b) = (rep.alpha()?, rep.beta()?);
            vec![
                one_minus(a * b * g * &t),
                one_minus(a * g * &t),
                one_minus(b * g * &t),
                one_minus(g * &t),
            ]
        }
        RepType::IIb => {
            let a = rep.alpha()?;
            vec![
                one_minus(a * a * g * &t),
                one_minus(g * &t),
                one_minus(a * g * &t * qh(-1)),
                one_minus(a * g * &t * qh(1)),
            ]
        }
        RepType::IIIa => {
            let a = rep.alpha()?;
            vec![one_minus(a * g * &t * qh(-1)), one_minus(g * &t * qh(-1))]
        }
        RepType::VIb => {
            let f = one_minus(g * &t * qh(-1));
            vec![f.clone(), f]
        }
    };
    inv_product(factors)
}

/// Shift `s ↦ s + k/2`, i.e. `T ↦ T·Q^{−k}`.
pub fn shift_half(f: &RatFunc, k: i32) -> Result<RatFunc> {
    Ok(f.subst(&[(Var::T, RatFunc::var(Var::T) * qh(-k))])?)
}

/// `L(s + 1/2, π, μ)`.
pub fn spinor_lfactor_half(rep: &LocalRep, twist: &TwistData) -> Result<RatFunc> {
    shift_half(&spinor_lfactor(rep, twist)?, 1)
}

/// Standard (degree-5) L-factor in `T` for the spherical types.
pub fn std_lfactor(rep: &LocalRep) -> Result<RatFunc> {
    let t = RatFunc::var(Var::T);
    let inv = |f: &RatFunc| f.inv().map_err(Gsp4Error::from);
    let factors = match rep.tag() {
        RepType::I => {
            let (a, b) = (rep.alpha()?, rep.beta()?);
            vec![
                one_minus(a * &t),
                one_minus(b * &t),
                one_minus(&t * inv(a)?),
                one_minus(&t * inv(b)?),
                one_minus(t.clone()),
            ]
        }
        RepType::IIb => {
            let a = rep.alpha()?;
            vec![
                one_minus(a * &t * qh(1)),
                one_minus(a * &t * qh(-1)),
                one_minus(&t * qh(1) * inv(a)?),
                one_minus(&t * inv(&(a * qh(1)))?),
                one_minus(t.clone()),
            ]
        }
        tag => return Err(Gsp4Error::Unsupported { op: "std_lfactor", tag }),
    };
    inv_product(factors)
}

/// Which ε-factor formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EpsCase {
    /// Spherical representation, ramified twist.
    RamifiedSpherical,
    IIIa,
    VIb,
    /// Spherical representation (types I, IIb), unramified twist.
    OldSpherical,
}

impl FromStr for EpsCase {
    type Err = Gsp4Error;

    fn from_str(s: &str) -> Result<EpsCase> {
        match s {
            "ramified_spherical" => Ok(EpsCase::RamifiedSpherical),
            "IIIa" => Ok(EpsCase::IIIa),
            "VIb" => Ok(EpsCase::VIb),
            "old_I_IIb" => Ok(EpsCase::OldSpherical),
            _ => Err(Gsp4Error::InvalidParams(format!("unknown ε case `{s}`"))),
        }
    }
}

/// Opaque unit-modulus symbol standing for `μ(−a⁻²d)`.
pub fn mu_ad_symbol() -> Var {
    Var::new("MUAD").expect("valid variable name")
}

/// Opaque unit-modulus symbol standing for `conj(W_F(μ,ψ))⁴`.
pub fn root_number_symbol() -> Var {
    Var::new("WF4").expect("valid variable name")
}

/// Local ε-factor `ε(s, π, μ, ψ)` as a function of `T`.
///
/// * IIIa, VIb: `μ(ϖ)² q^{2(1/2−s)} = U²Q²T²`;
/// * I, IIb with unramified twist: `1`;
/// * I, IIb with twist of conductor `e`: `q^{4e(1/2−s)} λ^{−e} μ(−a⁻²d) conj(W_F)⁴`
///   `= Q^{4e} T^{4e} λ^{−e}·MUAD·WF4`, the last two as opaque symbols (their
///   numeric values come from [`crate::ramified`]).
pub fn local_epsilon(rep: &LocalRep, twist: &TwistData, case: EpsCase) -> Result<RatFunc> {
    let tag = rep.tag();
    let mismatch = || Gsp4Error::InconsistentCase(format!("case {case:?} with type {tag} and conductor {}", twist.e));
    match case {
        EpsCase::IIIa | EpsCase::VIb => {
            let ok = (case == EpsCase::IIIa && tag == RepType::IIIa) || (case == EpsCase::VIb && tag == RepType::VIb);
            if !ok || twist.e > 0 {
                return Err(mismatch());
            }
            Ok(&twist.u * &twist.u * qh(2) * RatFunc::mono(&[(Var::T, 2)]))
        }
        EpsCase::OldSpherical => {
            if !tag.is_spherical() || twist.e > 0 {
                return Err(mismatch());
            }
            Ok(RatFunc::one())
        }
        EpsCase::RamifiedSpherical => {
            if !tag.is_spherical() || twist.e == 0 {
                return Err(mismatch());
            }
            let e = twist.e as i32;
            let units = RatFunc::var(mu_ad_symbol()) * RatFunc::var(root_number_symbol());
            Ok(RatFunc::mono(&[(Var::Q, 4 * e), (Var::T, 4 * e)]) * twist.lambda.pow(-e)? * units)
        }
    }
}

/// The t-factor as a function of the symbols: 1 for VIb, 2 for IIIa, and for
/// the spherical types
/// `2(q−1)q⁻⁵ L(1,π,Std)·{1 + u² − u/(q+1)·tr(q⁻¹T₁₀ + η)}`.
pub fn t_factor_symbolic(rep: &LocalRep, twist: &TwistData) -> Result<RatFunc> {
    twist.require_unramified()?;
    match rep.tag() {
        RepType::VIb => Ok(RatFunc::one()),
        RepType::IIIa => Ok(RatFunc::int(2)),
        RepType::I | RepType::IIb => {
            let h = hecke_matrices(rep)?;
            let qq = q();
            let tr = h.t10.scale(&qq.inv()?).add(&h.eta)?.trace()?;
            let std1 = std_lfactor(rep)?.subst(&[(Var::T, qq.inv()?)])?;
            let u = &twist.u;
            let brace = RatFunc::one() + u * u - u * tr * (&qq + RatFunc::one()).inv()?;
            let pre = RatFunc::int(2) * (&qq - RatFunc::one()) * qh(-10);
            Ok(pre * std1 * brace)
        }
    }
}

/// Numeric t-factor at a prime `p` (`Q = √p`); `env` supplies the remaining
/// symbols (Satake parameters, `U`) when they are not already specialized.
pub fn t_factor(rep: &LocalRep, twist: &TwistData, p: u64, env: &[(Var, Complex64)]) -> Result<Complex64> {
    let f = t_factor_symbolic(rep, twist)?;
    let mut full: Vec<(Var, Complex64)> = vec![(Var::Q, Complex64::new((p as f64).sqrt(), 0.0))];
    full.extend_from_slice(env);
    eval_complex(&f, &full)
}

/// Exact t-factor in `Q(√p)` when every parameter is rational.
pub fn t_factor_exact(rep: &LocalRep, twist: &TwistData, p: u64) -> Result<QuadSurd> {
    eval_at_sqrt(&t_factor_symbolic(rep, twist)?, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use symfield::parse;

    #[test]
    fn dims_table() {
        let d: Vec<_> = RepType::ALL.iter().map(|t| t.dims()).collect();
        assert_eq!(d, vec![(1, 4), (1, 3), (0, 2), (0, 1)]);
    }

    #[test]
    fn parameter_presence_is_enforced() {
        assert!(LocalRep::new(RepType::VIb, Some(RatFunc::one()), None, RatFunc::one()).is_err());
        assert!(LocalRep::new(RepType::I, Some(RatFunc::one()), None, RatFunc::one()).is_err());
        assert!(LocalRep::type_iib(RatFunc::one(), RatFunc::one()).is_ok());
        assert!("iiia".parse::<RepType>().unwrap() == RepType::IIIa);
        assert!("V".parse::<RepType>().is_err());
    }

    #[test]
    fn spinor_table_entries() {
        let t = TwistData::trivial();
        let iiia = spinor_lfactor(&LocalRep::symbolic(RepType::IIIa), &t).unwrap();
        assert_eq!(iiia, parse("1/((1 - A*G*T/Q)*(1 - G*T/Q))").unwrap());
        let vib = spinor_lfactor(&LocalRep::type_vib(RatFunc::one()).unwrap(), &t).unwrap();
        assert_eq!(vib, parse("(1 - T/Q)^-2").unwrap());
        let i = spinor_lfactor(&LocalRep::type_i(1.into(), 1.into(), 1.into()).unwrap(), &t).unwrap();
        assert!(i.subst(&[(Var::T, RatFunc::zero())]).unwrap().is_one());
        let iib = spinor_lfactor(&LocalRep::symbolic(RepType::IIb), &t).unwrap();
        assert_eq!(iib, parse("1/((1-A^2*G*T)*(1-G*T)*(1-A*G*T/Q)*(1-A*G*T*Q))").unwrap());
    }

    #[test]
    fn twist_scales_t_and_ramified_is_rejected() {
        let rep = LocalRep::symbolic(RepType::I);
        let untw = spinor_lfactor(&rep, &TwistData::trivial()).unwrap();
        let tw = spinor_lfactor(&rep, &TwistData::symbolic()).unwrap();
        assert_eq!(tw.subst(&[(Var::U, RatFunc::one())]).unwrap(), untw);
        assert_eq!(untw.subst(&[(Var::T, parse("U*T").unwrap())]).unwrap(), tw);
        assert_eq!(spinor_lfactor(&rep, &TwistData::ramified(1)), Err(Gsp4Error::RamifiedTwist(1)));
    }

    #[test]
    fn type_i_swap_symmetry() {
        let rep = LocalRep::symbolic_trivial_central(RepType::I);
        let f = spinor_lfactor(&rep, &TwistData::symbolic()).unwrap();
        // With α = β⁻¹γ⁻², swapping α ↔ β means β ↦ β⁻¹γ⁻².
        let swapped = f.subst(&[(Var::B, parse("1/(B*G^2)").unwrap())]).unwrap();
        assert_eq!(f, swapped);
    }

    #[test]
    fn std_factor_examples() {
        let rep = LocalRep::type_i(1.into(), 1.into(), RatFunc::var(Var::G)).unwrap();
        assert_eq!(std_lfactor(&rep).unwrap(), parse("(1-T)^-5").unwrap());
        let v = std_lfactor(&rep).unwrap().subst(&[(Var::T, RatFunc::frac(1, 3))]).unwrap();
        assert_eq!(v, RatFunc::frac(243, 32));
        let generic = std_lfactor(&LocalRep::symbolic(RepType::IIb)).unwrap();
        assert!(generic.subst(&[(Var::T, RatFunc::zero())]).unwrap().is_one());
        assert!(std_lfactor(&LocalRep::symbolic(RepType::VIb)).is_err());
    }

    #[test]
    fn epsilon_cases() {
        let tw = TwistData::symbolic();
        let a = local_epsilon(&LocalRep::symbolic(RepType::IIIa), &tw, EpsCase::IIIa).unwrap();
        let b = local_epsilon(&LocalRep::symbolic(RepType::VIb), &tw, EpsCase::VIb).unwrap();
        assert_eq!(a, parse("U^2*Q^2*T^2").unwrap());
        assert_eq!(a, b);
        assert!(local_epsilon(&LocalRep::symbolic(RepType::I), &tw, EpsCase::OldSpherical).unwrap().is_one());
        assert!(local_epsilon(&LocalRep::symbolic(RepType::I), &tw, EpsCase::IIIa).is_err());
        assert!(local_epsilon(&LocalRep::symbolic(RepType::I), &tw, EpsCase::RamifiedSpherical).is_err());
        let ram = TwistData { lambda: RatFunc::one(), ..TwistData::ramified(1) };
        let eps = local_epsilon(&LocalRep::symbolic(RepType::IIb), &ram, EpsCase::RamifiedSpherical).unwrap();
        assert_eq!(eps, parse("Q^4*T^4*MUAD*WF4").unwrap());
    }

    #[test]
    fn t_factor_pins() {
        let tw = TwistData::trivial();
        let vib = t_factor(&LocalRep::symbolic(RepType::VIb), &tw, 3, &[]).unwrap();
        let iiia = t_factor(&LocalRep::symbolic(RepType::IIIa), &tw, 3, &[]).unwrap();
        assert_eq!((vib + iiia).re, 3.0);
        let rep = LocalRep::type_i(1.into(), 1.into(), 1.into()).unwrap();
        let v = t_factor(&rep, &tw, 3, &[]).unwrap();
        assert!((v.re - (2.0 - 3f64.sqrt()) / 8.0).abs() < 1e-12 && v.im.abs() < 1e-12);
        assert!(t_factor(&rep, &TwistData::ramified(1), 3, &[]).is_err());
    }

    #[test]
    fn central_characters_and_conjugation() {
        for tag in RepType::ALL {
            assert!(LocalRep::symbolic_trivial_central(tag).has_trivial_central_character(), "{tag}");
            assert!(!LocalRep::symbolic(tag).has_trivial_central_character(), "{tag}");
        }
        let rep = LocalRep::type_iib(RatFunc::int(2), RatFunc::frac(1, 2)).unwrap();
        assert!(rep.unitarity_note().is_some());
        assert!(matches!(rep.conj(), Err(Gsp4Error::NonUnitary(_))));
        let c = LocalRep::symbolic(RepType::I).conj().unwrap();
        assert_eq!(c.alpha().unwrap(), &parse("1/A").unwrap());
    }
}
