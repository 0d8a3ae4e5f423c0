//! Ramified-twist zeta integrals: coset sums against closed forms, and the
//! ε-factor obtained from the local functional equation.

use gsp4::ramified::{epsilon_closed, epsilon_from_zetas, zeta_case2_3_closed, zeta_case2_3_numeric, RamifiedSetup};
use gsp4::{LocalRep, RepType};
use num_complex::Complex64;
use padicring::{characters_with_conductor, gauss_sum_f, gauss_sum_l, GaloisRing, ResidueRing, SymForm};
use symfield::Var;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn satake_env() -> Vec<(Var, Complex64)> {
    vec![
        (Var::A, Complex64::from_polar(1.0, 0.3)),
        (Var::B, Complex64::from_polar(1.0, -1.1)),
        (Var::G, Complex64::from_polar(1.0, 0.7)),
    ]
}

fn samples() -> [Complex64; 3] {
    [c(0.3, 0.0), c(0.7, 0.2), c(1.1, 0.0)]
}

fn setups(p: u64, e: u32, forms: &[SymForm]) -> Vec<RamifiedSetup> {
    let r = ResidueRing::new(p, e).unwrap();
    let mut out = Vec::new();
    for (i, form) in forms.iter().enumerate() {
        for (k, pi) in [0.0, 0.9, 2.5].into_iter().enumerate() {
            for mu in characters_with_conductor(&r, e, Complex64::from_polar(1.0, pi)).into_iter().take(2) {
                let lambda = Complex64::from_polar(1.0, 0.2 * (i + k) as f64);
                out.push(RamifiedSetup::new(*form, mu, lambda).unwrap());
            }
        }
    }
    out
}

fn check_routes(p: u64, e: u32, forms: &[SymForm]) {
    let rep = LocalRep::symbolic(RepType::I);
    let env = satake_env();
    for st in setups(p, e, forms) {
        for s in samples() {
            let num = zeta_case2_3_numeric(&rep, &env, &st, s).unwrap();
            let cl = zeta_case2_3_closed(&st, s).unwrap();
            let scale = cl.z_phi.norm().max(1e-300);
            assert!((num.z_phi - cl.z_phi).norm() <= 1e-8 * scale.max(1.0), "p={p} e={e} s={s}");
            let scale = cl.z_phihat.norm().max(1e-300);
            assert!((num.z_phihat - cl.z_phihat).norm() <= 1e-8 * scale.max(1.0), "p={p} e={e} s={s}");
        }
    }
}

const FORMS_3: [SymForm; 3] = [SymForm { a: 1, b: 0, c: 1 }, SymForm { a: 1, b: 1, c: 2 }, SymForm { a: 2, b: 1, c: 1 }];

#[test]
fn coset_sums_match_closed_forms_p3_e1() {
    check_routes(3, 1, &FORMS_3);
}

#[test]
fn coset_sums_match_closed_forms_p3_e2() {
    check_routes(3, 2, &FORMS_3[..1]);
}

#[test]
fn coset_sums_match_closed_forms_p5_e1() {
    // d = −7 ≡ 3 and d = −4 ≡ 1 mod 5: only the first is inert.
    check_routes(5, 1, &[SymForm { a: 1, b: 1, c: 2 }]);
}

#[test]
fn functional_equation_ratio_is_the_epsilon_factor() {
    let rep = LocalRep::symbolic(RepType::IIb);
    let env = [(Var::A, Complex64::from_polar(1.0, 1.3)), (Var::G, Complex64::from_polar(1.0, -0.4))];
    for st in setups(3, 1, &FORMS_3) {
        for s in samples() {
            let ratio = epsilon_from_zetas(&rep, &env, &st, s).unwrap();
            let eps = epsilon_closed(&st, s + 0.5).unwrap();
            assert!((ratio - eps).norm() < 1e-8 * eps.norm(), "{ratio} vs {eps}");
        }
    }
}

#[test]
fn epsilon_second_form_and_symmetry() {
    // ε(s+1/2) = (−1)^e q^{−4es} λ^{−e} μ(a⁻²d)·conj(W_L(μ)) conj(W_F(μ̄))… is
    // equivalent to the W_F⁴ form; check against the W_L form directly.
    for st in setups(3, 1, &FORMS_3) {
        let s = c(0.3, 0.1);
        let (q, e) = (st.p() as f64, st.e() as i32);
        let form = st.form();
        let d = form.disc() as i64;
        let gr = GaloisRing::with_delta(st.p(), st.e(), d).unwrap();
        let mubar = st.mu().conj();
        let wl_bar = gauss_sum_l(&mubar, &gr).unwrap();
        let wf_bar = gauss_sum_f(&mubar).unwrap();
        let wf = gauss_sum_f(st.mu()).unwrap();
        let sign = if e % 2 == 0 { 1.0 } else { -1.0 };
        let direct = sign
            * (-(4.0 * e as f64) * s * q.ln()).exp()
            * st.lambda().powi(-e)
            * st.mu().value_rational(d, form.a * form.a).unwrap()
            * wl_bar
            * wf_bar
            / wf;
        let eps = epsilon_closed(&st, s + 0.5).unwrap();
        assert!((direct - eps).norm() < 1e-9);
        // ε(s+1/2, μ)·ε(1/2−s, μ̄) = λ^{−2e}.
        let back = epsilon_closed(&st.conj(), 0.5 - s).unwrap();
        assert!((eps * back - st.lambda().powi(-2 * e)).norm() < 1e-9);
    }
}
