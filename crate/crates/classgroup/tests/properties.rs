//! Group axioms, character orthogonality and the conjugation sign law for
//! twisted coefficient sums.

use classgroup::{bessel_coeff_sum, reduce_form, ClassGroup, QuadForm};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DISCS: [i64; 9] = [-3, -4, -7, -8, -11, -15, -20, -23, -47];

fn groups() -> Vec<ClassGroup> {
    DISCS.iter().chain(&[-84, -260]).map(|d| ClassGroup::new(*d).unwrap()).collect()
}

#[test]
fn group_axioms() {
    for g in groups() {
        let h = g.order();
        for i in 0..h {
            assert_eq!(g.compose(i, g.identity()), i);
            assert_eq!(g.compose(i, g.inverse(i)), g.identity());
            for j in 0..h {
                assert_eq!(g.compose(i, j), g.compose(j, i));
                for k in 0..h {
                    assert_eq!(g.compose(g.compose(i, j), k), g.compose(i, g.compose(j, k)), "D={}", g.disc());
                }
            }
        }
        assert_eq!(g.invariants().iter().product::<u64>(), h as u64);
    }
}

#[test]
fn character_orthogonality() {
    for g in groups() {
        let chars = g.characters();
        let h = g.order();
        assert_eq!(chars.len(), h);
        for (a, x) in chars.iter().enumerate() {
            for (b, y) in chars.iter().enumerate() {
                let s: Complex64 = (0..h).map(|i| x.value(i) * y.value(i).conj()).sum();
                let expect = if a == b { h as f64 } else { 0.0 };
                assert!((s - expect).norm() < 1e-9, "D={} {a} {b}", g.disc());
            }
        }
        // Column orthogonality: Σ_χ χ(x) = h·[x = 1].
        for i in 0..h {
            let s: Complex64 = chars.iter().map(|c| c.value(i)).sum();
            let expect = if i == g.identity() { h as f64 } else { 0.0 };
            assert!((s - expect).norm() < 1e-9);
        }
    }
}

#[test]
fn conjugation_sign_law_on_random_coefficients() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB55E1);
    for g in groups() {
        let h = g.order();
        for parity in [0u32, 1] {
            let sign = if parity == 0 { 1.0 } else { -1.0 };
            for _ in 0..100 {
                // Coefficients with c(x̄) = (−1)^parity · c(x).
                let mut c = vec![Complex64::new(0.0, 0.0); h];
                for i in 0..h {
                    let j = g.conjugate_class(i);
                    if j < i {
                        continue;
                    }
                    let v = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    if j == i {
                        c[i] = if parity == 0 { v } else { Complex64::new(0.0, 0.0) };
                    } else {
                        c[i] = v;
                        c[j] = v * sign;
                    }
                }
                for chi in g.characters() {
                    let r = bessel_coeff_sum(&c, &chi).unwrap();
                    let rc = bessel_coeff_sum(&c, &chi.conj()).unwrap();
                    assert!((rc - r * sign).norm() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn coefficient_sum_checks_length() {
    let g = ClassGroup::new(-23).unwrap();
    assert!(bessel_coeff_sum(&[Complex64::new(1.0, 0.0)], &g.character(0)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reduction_witness_is_sl2(a in 1i64..200, b in -300i64..300, c in 1i64..200) {
        let f = QuadForm::new(a, b, c);
        prop_assume!(f.disc() < 0);
        let r = reduce_form(f).unwrap();
        let [[p, q], [s, t]] = r.witness;
        prop_assert_eq!(p * t - q * s, 1);
        prop_assert_eq!(f.transform(&r.witness), r.form);
        prop_assert!(r.form.is_reduced());
        prop_assert_eq!(r.form.disc(), f.disc());
    }

    #[test]
    fn class_of_is_invariant_under_sl2(d_idx in 0usize..9, i in 0usize..5, p in -5i64..6, q in -5i64..6) {
        let g = ClassGroup::new(DISCS[d_idx]).unwrap();
        let i = i % g.order();
        // [[1, p], [q, 1 + pq]] ∈ SL₂(Z).
        let w = [[1, p], [q, 1 + p * q]];
        let f = g.classes()[i].transform(&w);
        prop_assert_eq!(g.class_of(f).unwrap(), i);
    }
}
