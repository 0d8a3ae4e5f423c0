//! Hecke (`T₁₀`) and Atkin–Lehner (`η`) matrices on `K₀(p)`-fixed Bessel
//! vectors, Bessel values at the identity, the generating series of diagonal
//! Bessel values, local zeta integrals and local periods.
//!
//! Conventions: basis vectors `B_1, …, B_n`; matrices act on column
//! coordinates, `T B_j = Σ_i M_ij B_i`. The series variable is
//! `X = μ(ϖ)q^{1−s} = U·T·Q²` and one step of the diagonal recursion
//! `T₁₀ B(h(l,0)) = q³ B(h(l+1,0))` contributes `X/q³`.
//!
//! Every zeta integral is available twice: as the closed form and through the
//! geometric-series route
//! `Z(B_j; η) = L(s+1, Λμ_L)/(q²+1) · bᵀ (I − q⁻³X·T₁₀)⁻¹ (η + λ⁻¹q²X⁻¹) e_j`
//! with `b` the vector of values `B_i(1)`.

use symfield::{q, qh, RatFunc, RatMatrix, SymError, Var};

use crate::localrep::{spinor_lfactor_half, std_lfactor, LocalRep, RepType, TwistData};
use crate::{Gsp4Error, Result};

/// Matrices of `T₁₀` and `η` on the `K₀(p)`-fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckePair {
    pub t10: RatMatrix,
    pub eta: RatMatrix,
}

fn mat(rows: Vec<Vec<RatFunc>>) -> RatMatrix {
    RatMatrix::from_rows(rows).expect("rectangular literal")
}

fn zero() -> RatFunc {
    RatFunc::zero()
}

/// `T₁₀` and `η` for each type. For IIIa and VIb these are the eigen-data
/// `T₁₀B₁ = αγqB₁, T₁₀B₂ = γqB₂, ηB₁ = αγB₂, ηB₂ = γB₁` resp.
/// `T₁₀B = γqB, ηB = γB`.
pub fn hecke_matrices(rep: &LocalRep) -> Result<HeckePair> {
    let g = rep.gamma().clone();
    let (q1, q3) = (q() - RatFunc::one(), qh(3));
    let pair = match rep.tag() {
        RepType::I => {
            let (a, b) = (rep.alpha()?.clone(), rep.beta()?.clone());
            let abg = &a * &b * &g;
            let bg = &b * &g;
            let ag = &a * &g;
            let off = |x: &RatFunc| x * &q1 * qh(1);
            let t10 = mat(vec![
                vec![&abg * &q3, zero(), zero(), zero()],
                vec![off(&abg), &bg * &q3, zero(), zero()],
                vec![off(&abg), off(&bg), &ag * &q3, zero()],
                vec![off(&abg), off(&bg), off(&ag), &g * &q3],
            ]);
            let eta = mat(vec![
                vec![zero(), zero(), zero(), &g * &q3],
                vec![zero(), zero(), &ag * qh(1), zero()],
                vec![zero(), &bg * qh(-1), zero(), zero()],
                vec![&abg * qh(-3), zero(), zero(), zero()],
            ]);
            HeckePair { t10, eta }
        }
        RepType::IIb => {
            let a = rep.alpha()?.clone();
            let a2g = &a * &a * &g;
            let ag = &a * &g;
            let t10 = mat(vec![
                vec![&a2g * &q3, zero(), zero()],
                vec![&a2g * &q1 * qh(1), &ag * qh(4), zero()],
                vec![&a2g * &q1 * qh(1), &ag * (qh(4) - RatFunc::one()), &g * &q3],
            ]);
            let eta = mat(vec![
                vec![zero(), zero(), &g * &q3],
                vec![zero(), ag, zero()],
                vec![a2g * qh(-3), zero(), zero()],
            ]);
            HeckePair { t10, eta }
        }
        RepType::IIIa => {
            let a = rep.alpha()?.clone();
            let ag = &a * &g;
            HeckePair {
                t10: RatMatrix::diagonal(&[&ag * q(), &g * q()]),
                eta: mat(vec![vec![zero(), g], vec![ag, zero()]]),
            }
        }
        RepType::VIb => HeckePair { t10: RatMatrix::diagonal(&[&g * q()]), eta: RatMatrix::diagonal(&[g]) },
    };
    Ok(pair)
}

fn degenerate(_: SymError) -> Gsp4Error {
    Gsp4Error::Degenerate("a Bessel-value denominator vanishes (α or β equals a power of q^{1/2})".into())
}

/// `B_i(1)` for the basis of `K₀(p)`-fixed vectors. Types I and IIb are
/// normalized so that the spherical vector `Σ B_i` has value 1 at the
/// identity; IIIa uses `B₁(1) = 1`, VIb `B(1) = 1`.
pub fn bessel_identity_values(rep: &LocalRep) -> Result<Vec<RatFunc>> {
    let qq = q();
    match rep.tag() {
        RepType::I => {
            let (a, b) = (rep.alpha()?, rep.beta()?);
            let den = ((&qq - a) * (&qq - b)).inv().map_err(degenerate)?;
            Ok(vec![a * b * &den, -(&qq * b * &den), -(&qq * a * &den), &qq * &qq * &den])
        }
        RepType::IIb => {
            let a = rep.alpha()?;
            let den = ((qh(1) - a) * (qh(3) - a)).inv().map_err(degenerate)?;
            let mid = -(qh(1) * (RatFunc::one() + &qq) * a * &den);
            Ok(vec![a * a * &den, mid, &qq * &qq * &den])
        }
        RepType::IIIa => Ok(vec![RatFunc::one(), rep.alpha()?.inv().map_err(degenerate)?]),
        RepType::VIb => Ok(vec![RatFunc::one()]),
    }
}

/// `⟨B_i | B_i⟩`: I: `q^{i−1}(q+1)`; IIb: `q+1, q(q+1)², q³(q+1)`; IIIa and
/// VIb bases are orthonormal.
pub fn bessel_norms(tag: RepType) -> Vec<RatFunc> {
    let qq = q();
    let q1 = &qq + RatFunc::one();
    match tag {
        RepType::I => (0..4).map(|i| qh(2 * i) * &q1).collect(),
        RepType::IIb => vec![q1.clone(), &qq * &q1 * &q1, qh(6) * &q1],
        RepType::IIIa => vec![RatFunc::one(), RatFunc::one()],
        RepType::VIb => vec![RatFunc::one()],
    }
}

/// `X = μ(ϖ)q^{1−s} = u·T·Q²`.
pub fn series_variable(twist: &TwistData) -> RatFunc {
    &twist.u * RatFunc::var(Var::T) * qh(2)
}

/// `L(s+1, Λμ_L) = (1 − λu²q^{−2(s+1)})⁻¹ = (1 − λX²q⁻⁴)⁻¹`.
pub fn l_quadratic(twist: &TwistData) -> Result<RatFunc> {
    let x = series_variable(twist);
    Ok((RatFunc::one() - &twist.lambda * &x * &x * qh(-8)).inv()?)
}

fn require_spherical(rep: &LocalRep, op: &'static str) -> Result<()> {
    if rep.tag().is_spherical() {
        Ok(())
    } else {
        Err(Gsp4Error::Unsupported { op, tag: rep.tag() })
    }
}

fn resolvent(rep: &LocalRep, x: &RatFunc) -> Result<RatMatrix> {
    let h = hecke_matrices(rep)?;
    Ok(h.t10.geom_resolvent(&(x * qh(-6)))?)
}

fn row(v: &[RatFunc]) -> RatMatrix {
    RatMatrix::row(v)
}

/// `Σ_{l≥0} B⁰(h(l,0)) x^l = bᵀ(I − q⁻³x·T₁₀)⁻¹·1` for the spherical vector
/// `B⁰ = Σ B_i`, as a function of the free variable `x`.
pub fn diag_series(rep: &LocalRep, x: Var) -> Result<RatFunc> {
    require_spherical(rep, "diag_series")?;
    let b = bessel_identity_values(rep)?;
    let r = resolvent(rep, &RatFunc::var(x))?;
    let ones = RatMatrix::column(&vec![RatFunc::one(); b.len()]);
    Ok(row(&b).mul(&r)?.mul(&ones)?.get(0, 0).clone())
}

/// Diagonal Bessel values `B⁰(h(l,0))` for `l = 0..=n`.
pub fn diag_values(rep: &LocalRep, n: usize) -> Result<Vec<RatFunc>> {
    Ok(diag_series(rep, Var::X)?.taylor(Var::X, n)?)
}

/// Unramified zeta integral of the spherical vector:
/// `L(s+1, Λμ_L) · Σ_l B⁰(h(l,0)) X^l` at `X = uTQ²`. Equals
/// `L(s+1/2, π, μ)` whenever `λ` is the central character value.
pub fn zeta_case1(rep: &LocalRep, twist: &TwistData) -> Result<RatFunc> {
    twist.require_unramified()?;
    let series = diag_series(rep, Var::X)?.subst(&[(Var::X, series_variable(twist))])?;
    Ok(l_quadratic(twist)? * series)
}

fn basis_index(rep: &LocalRep, j: usize) -> Result<usize> {
    let n = rep.tag().dims().1;
    if j < n {
        Ok(j)
    } else {
        Err(Gsp4Error::InvalidParams(format!("basis index {j} out of range for type {} (dimension {n})", rep.tag())))
    }
}

/// Geometric-series route for `Z(φ, B_j, s, μ; η)` (any type, 0-based `j`).
pub fn zeta_series(rep: &LocalRep, twist: &TwistData, j: usize) -> Result<RatFunc> {
    twist.require_unramified()?;
    let j = basis_index(rep, j)?;
    let x = RatFunc::var(Var::X);
    let h = hecke_matrices(rep)?;
    let b = bessel_identity_values(rep)?;
    let n = b.len();
    let r = h.t10.geom_resolvent(&(&x * qh(-6)))?;
    let shift = q() * q() * (&twist.lambda * &x).inv()?;
    let kernel = h.eta.add(&RatMatrix::identity(n).scale(&shift))?;
    let mut ej = vec![RatFunc::zero(); n];
    ej[j] = RatFunc::one();
    let v = row(&b).mul(&r)?.mul(&kernel)?.mul(&RatMatrix::column(&ej))?.get(0, 0).clone();
    let v = v.subst(&[(Var::X, series_variable(twist))])?;
    Ok(l_quadratic(twist)? * v * (q() * q() + RatFunc::one()).inv()?)
}

fn require_case4(rep: &LocalRep, twist: &TwistData) -> Result<()> {
    require_spherical(rep, "zeta_case4")?;
    twist.require_unramified()?;
    rep.require_trivial_central_character("zeta_case4")?;
    if !twist.lambda.is_one() {
        return Err(Gsp4Error::InvalidParams("zeta_case4 needs Λ(ϖ) = 1".into()));
    }
    Ok(())
}

/// `Z(φ, B_j, s, μ; η) / L(s+1/2, π, μ)` for I, IIb:
/// `(q²+1)⁻¹ [bᵀη e_j + q⁻¹ bᵀT₁₀ e_j + (q²X⁻¹ + X − tr(q⁻¹T₁₀ + η))·b_j]`.
pub fn zeta_case4_normalized(rep: &LocalRep, twist: &TwistData, j: usize) -> Result<RatFunc> {
    require_case4(rep, twist)?;
    let j = basis_index(rep, j)?;
    let h = hecke_matrices(rep)?;
    let b = bessel_identity_values(rep)?;
    let qi = q().inv()?;
    let op = h.eta.add(&h.t10.scale(&qi))?;
    let tr = op.trace()?;
    let bt = row(&b).mul(&op)?;
    let x = series_variable(twist);
    let brace = q() * q() * x.inv()? + &x - tr;
    let v = bt.get(0, j) + brace * &b[j];
    Ok(v * (q() * q() + RatFunc::one()).inv()?)
}

/// Closed form of `Z(φ, B_j, s, μ; η)` for I, IIb (trivial central character,
/// `Λ = 1`, unramified μ).
pub fn zeta_case4(rep: &LocalRep, twist: &TwistData, j: usize) -> Result<RatFunc> {
    Ok(spinor_lfactor_half(rep, twist)? * zeta_case4_normalized(rep, twist, j)?)
}

/// `λ⁻¹u⁻¹q^{s+1}(q²+1)⁻¹ = λ⁻¹U⁻¹Q²T⁻¹(Q⁴+1)⁻¹`.
fn case56_prefactor(twist: &TwistData) -> Result<RatFunc> {
    let num = (&twist.lambda * &twist.u * RatFunc::var(Var::T)).inv()? * qh(2);
    Ok(num * (qh(4) + RatFunc::one()).inv()?)
}

/// Closed form of `Z(φ, B_j, s, μ; η)` for IIIa and VIb:
/// `λ⁻¹u⁻¹q^{s+1}(q²+1)⁻¹ L(s+1/2, π, μ) B_j(1)`.
pub fn zeta_case5_6(rep: &LocalRep, twist: &TwistData, j: usize) -> Result<RatFunc> {
    if rep.tag().is_spherical() {
        return Err(Gsp4Error::Unsupported { op: "zeta_case5_6", tag: rep.tag() });
    }
    twist.require_unramified()?;
    let j = basis_index(rep, j)?;
    let b = bessel_identity_values(rep)?;
    Ok(case56_prefactor(twist)? * spinor_lfactor_half(rep, twist)? * &b[j])
}

/// Closed-form local period `Σ_B Z*(φ, B, s, μ; η)·conj(B(1))` over an
/// orthonormal basis, `Z* = Z / L(s+1/2, π, μ)`:
/// I, IIb: `2(q−1)q⁻⁵(q²+1)⁻¹ L(1,π,Std)·{q²X⁻¹ + X − (q+1)⁻¹tr(T₁₀ + qη)}`;
/// IIIa: `2λ⁻¹u⁻¹q^{s+1}(q²+1)⁻¹`; VIb: `λ⁻¹u⁻¹q^{s+1}(q²+1)⁻¹`.
pub fn local_period(rep: &LocalRep, twist: &TwistData) -> Result<RatFunc> {
    twist.require_unramified()?;
    match rep.tag() {
        RepType::I | RepType::IIb => {
            require_case4(rep, twist)?;
            let h = hecke_matrices(rep)?;
            let qq = q();
            let tr = h.t10.add(&h.eta.scale(&qq))?.trace()?;
            let x = series_variable(twist);
            let brace = &qq * &qq * x.inv()? + &x - tr * (&qq + RatFunc::one()).inv()?;
            let std1 = std_lfactor(rep)?.subst(&[(Var::T, qq.inv()?)])?;
            let pre = RatFunc::int(2) * (&qq - RatFunc::one()) * (qh(10) * (&qq * &qq + RatFunc::one())).inv()?;
            Ok(pre * std1 * brace)
        }
        RepType::IIIa => Ok(RatFunc::int(2) * case56_prefactor(twist)?),
        RepType::VIb => case56_prefactor(twist),
    }
}

/// Local period assembled from its components
/// `Σ_j Z*_j · conj(B_j(1)) / ⟨B_j|B_j⟩`, with the spherical `Z*_j` taken from
/// the geometric-series route and conjugation realized as `α, β, γ ↦` inverses.
pub fn local_period_components(rep: &LocalRep, twist: &TwistData) -> Result<RatFunc> {
    let b = bessel_identity_values(rep)?;
    let bc = bessel_identity_values(&rep.conj()?)?;
    let norms = bessel_norms(rep.tag());
    let lhalf_inv = spinor_lfactor_half(rep, twist)?.inv()?;
    let mut total = RatFunc::zero();
    for j in 0..b.len() {
        let z = if rep.tag().is_spherical() {
            require_case4(rep, twist)?;
            zeta_series(rep, twist, j)?
        } else {
            zeta_case5_6(rep, twist, j)?
        };
        total = total + z * &lhalf_inv * &bc[j] * norms[j].inv()?;
    }
    Ok(total)
}

/// Outcome of solving the IIIa recursion system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionReport {
    /// `B₂(1)` with the recursion scalar κ kept symbolic (variable `K`).
    pub b2_generic: RatFunc,
    /// `B₂(1)` at `κ = αγ²`.
    pub b2: RatFunc,
    /// `α⁻¹`.
    pub expected: RatFunc,
    pub consistent: bool,
}

/// Symbol for the scalar κ in the recursion relations.
pub fn kappa_symbol() -> Var {
    Var::new("K").expect("valid variable name")
}

/// Solve the four relations linking `x₁ = B₁(s₂)`, `x₂ = B₁(h(−1,1)s₁s₂)`,
/// `x₃ = B₁(h(0,1)s₁s₂)`, `y = B₂(1)` for a IIIa basis with `B₁(1) = 1`:
///
/// ```text
/// αγq·x₁ − q²x₂                     = αγ(q−1)
/// −(q²−1)x₂ + κγ⁻¹(q⁻¹−1)y          = αγ(q−1)
/// κ(αq+1)q·x₁ − q⁴x₃                = κ(αq² − αq − q² − 1)/(q+1)
/// −(q²−1)x₃ + κq⁻³(1−q)y            = καq⁻²(q−1)
/// ```
///
/// and confirm `B₂(1) = α⁻¹` at `κ = αγ²`.
pub fn recursion_consistency(rep: &LocalRep) -> Result<RecursionReport> {
    if rep.tag() != RepType::IIIa {
        return Err(Gsp4Error::Unsupported { op: "recursion_consistency", tag: rep.tag() });
    }
    let (a, g) = (rep.alpha()?.clone(), rep.gamma().clone());
    let k = RatFunc::var(kappa_symbol());
    let qq = q();
    let one = RatFunc::one();
    let q1 = &qq - &one;
    let ag = &a * &g;
    let sys = mat(vec![
        vec![&ag * &qq, -(&qq * &qq), zero(), zero()],
        vec![zero(), -(&qq * &qq - &one), zero(), &k * g.inv()? * (qq.inv()? - &one)],
        vec![&k * (&a * &qq + &one) * &qq, zero(), -(qh(8)), zero()],
        vec![zero(), zero(), -(&qq * &qq - &one), &k * qh(-6) * (&one - &qq)],
    ]);
    let rhs = RatMatrix::column(&[
        &ag * &q1,
        &ag * &q1,
        &k * (&a * &qq * &qq - &a * &qq - &qq * &qq - &one) * (&qq + &one).inv()?,
        &k * &a * qh(-4) * &q1,
    ]);
    let inv = sys.inverse().map_err(|_| Gsp4Error::InconsistentCase("recursion system is singular".into()))?;
    let sol = inv.mul(&rhs)?;
    let b2_generic = sol.get(3, 0).clone();
    let b2 = b2_generic.subst(&[(kappa_symbol(), &a * &g * &g)])?;
    let expected = a.inv()?;
    let consistent = b2 == expected;
    Ok(RecursionReport { b2_generic, b2, expected, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use symfield::parse;

    fn sym(tag: RepType) -> LocalRep {
        LocalRep::symbolic(tag)
    }

    #[test]
    fn type_i_diagonal_and_eta_square() {
        let h = hecke_matrices(&sym(RepType::I)).unwrap();
        let diag: Vec<String> = (0..4).map(|i| h.t10.get(i, i).to_text()).collect();
        assert_eq!(diag, ["A*B*G*Q^3", "B*G*Q^3", "A*G*Q^3", "G*Q^3"]);
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(h.t10.get(i, j).is_zero());
            }
        }
        for tag in RepType::ALL {
            let rep = sym(tag);
            let h = hecke_matrices(&rep).unwrap();
            let n = tag.dims().1;
            let expect = RatMatrix::identity(n).scale(&rep.central_character());
            assert_eq!(h.eta.mul(&h.eta).unwrap(), expect, "{tag}");
        }
    }

    #[test]
    fn identity_values() {
        let b = bessel_identity_values(&sym(RepType::I)).unwrap();
        assert_eq!(b[3], parse("Q^4/((Q^2-A)*(Q^2-B))").unwrap());
        for tag in [RepType::I, RepType::IIb] {
            let b = bessel_identity_values(&sym(tag)).unwrap();
            assert!(b.iter().fold(RatFunc::zero(), |s, x| s + x).is_one(), "{tag}");
        }
        let iiia = bessel_identity_values(&sym(RepType::IIIa)).unwrap();
        assert_eq!(iiia, vec![RatFunc::one(), parse("1/A").unwrap()]);
        let bad = LocalRep::type_i(parse("Q^2").unwrap(), RatFunc::one(), RatFunc::one()).unwrap();
        assert!(matches!(bessel_identity_values(&bad), Err(Gsp4Error::Degenerate(_))));
    }

    #[test]
    fn diag_series_leading_terms() {
        let rep = LocalRep::type_i(1.into(), 1.into(), 1.into()).unwrap();
        let v = diag_values(&rep, 3).unwrap();
        assert!(v[0].is_one());
        // Brute force: coefficient l is bᵀ(q⁻³M)^l·1.
        let h = hecke_matrices(&rep).unwrap();
        let b = bessel_identity_values(&rep).unwrap();
        let step = h.t10.scale(&qh(-6));
        let mut acc = RatMatrix::column(&[RatFunc::one(), RatFunc::one(), RatFunc::one(), RatFunc::one()]);
        for coeff in &v {
            let val = RatMatrix::row(&b).mul(&acc).unwrap().get(0, 0).clone();
            assert_eq!(&val, coeff);
            acc = step.mul(&acc).unwrap();
        }
    }

    #[test]
    fn case1_at_zero_and_untwisted() {
        let rep = LocalRep::type_i(1.into(), 1.into(), 1.into()).unwrap();
        let z = zeta_case1(&rep, &TwistData::symbolic()).unwrap();
        assert!(z.subst(&[(Var::T, RatFunc::zero())]).unwrap().is_one());
        let rep = LocalRep::symbolic_trivial_central(RepType::IIb);
        let tw = TwistData::trivial();
        assert_eq!(zeta_case1(&rep, &tw).unwrap(), spinor_lfactor_half(&rep, &tw).unwrap());
    }

    #[test]
    fn case4_numeric_instance() {
        let rep = LocalRep::type_i(1.into(), 1.into(), 1.into()).unwrap();
        let tw = TwistData::trivial();
        for j in 0..4 {
            assert_eq!(zeta_case4(&rep, &tw, j).unwrap(), zeta_series(&rep, &tw, j).unwrap(), "j={j}");
        }
        assert!(zeta_case4(&rep, &tw, 4).is_err());
        assert!(zeta_case4(&rep, &TwistData::symbolic(), 0).is_err());
    }

    #[test]
    fn case56_displays() {
        let tw = TwistData::symbolic();
        let vib = zeta_case5_6(&sym(RepType::VIb), &tw, 0).unwrap();
        let lhalf = spinor_lfactor_half(&sym(RepType::VIb), &tw).unwrap();
        assert_eq!(vib, parse("Q^2/(L*U*T*(Q^4+1))").unwrap() * &lhalf);
        let (t_lo, _) = (vib * lhalf.inv().unwrap()).num().degree_range(Var::T);
        assert_eq!(t_lo, -1);
        let iiia = sym(RepType::IIIa);
        let z1 = zeta_case5_6(&iiia, &tw, 0).unwrap();
        let z2 = zeta_case5_6(&iiia, &tw, 1).unwrap();
        assert_eq!(z2, z1 * parse("1/A").unwrap());
    }

    #[test]
    fn periods_small_types() {
        let tw = TwistData::symbolic();
        let vib = local_period(&sym(RepType::VIb), &tw).unwrap();
        assert_eq!(vib, parse("Q^2/(L*U*T*(Q^4+1))").unwrap());
        assert_eq!(local_period(&sym(RepType::IIIa), &tw).unwrap(), RatFunc::int(2) * &vib);
        assert_eq!(local_period_components(&sym(RepType::IIIa), &tw).unwrap(), RatFunc::int(2) * &vib);
        assert_eq!(local_period_components(&sym(RepType::VIb), &tw).unwrap(), vib);
    }

    #[test]
    fn recursion_solves_to_inverse_alpha() {
        let r = recursion_consistency(&sym(RepType::IIIa)).unwrap();
        assert!(r.consistent);
        let k = RatFunc::var(kappa_symbol());
        let expect = parse("A*G^2*Q^2").unwrap() * (k * parse("A*Q^2+1").unwrap() - parse("A*G^2").unwrap()).inv().unwrap();
        assert_eq!(r.b2_generic, expect);
        let one = LocalRep::type_iiia(RatFunc::one(), RatFunc::var(Var::G)).unwrap();
        assert!(recursion_consistency(&one).unwrap().b2.is_one());
        assert!(recursion_consistency(&sym(RepType::VIb)).is_err());
    }
}
