//! Class groups checked against independent constructions: brute-force
//! reduction of all small forms, the analytic class number formula, and
//! composition via multiplication of lattice ideals.

use classgroup::{compose_forms, enumerate_classes, reduce_form, ClassGroup, QuadForm};
use num_integer::Integer;

const DISCS: [i64; 9] = [-3, -4, -7, -8, -11, -15, -20, -23, -47];

fn kronecker(d: i64, n: i64) -> i64 {
    // (d/n) for n > 0 via Jacobi reciprocity, with the (d/2) rule.
    let mut n = n;
    let mut res = 1;
    while n % 2 == 0 {
        n /= 2;
        match d.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => res = -res,
            _ => return 0,
        }
    }
    let mut a = d.rem_euclid(n);
    let mut m = n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(m % 8, 3 | 5) {
                res = -res;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            res = -res;
        }
        a %= m;
    }
    if m == 1 {
        res
    } else {
        0
    }
}

fn analytic_class_number(d: i64) -> i64 {
    let w = classgroup::w_d(d) as i64;
    let s: i64 = (1..-d).map(|a| kronecker(d, a) * a).sum();
    -w * s / (2 * -d)
}

#[test]
fn class_numbers_match_analytic_formula() {
    for d in DISCS.iter().copied().chain([-56, -84, -71, -104, -199, -260, -420]) {
        let h = enumerate_classes(d).unwrap().len() as i64;
        assert_eq!(h, analytic_class_number(d), "D={d}");
    }
    let pins: Vec<usize> = [-3, -4, -23, -47].iter().map(|d| enumerate_classes(*d).unwrap().len()).collect();
    assert_eq!(pins, vec![1, 1, 3, 5]);
}

#[test]
fn class_lists_match_brute_force_reduction() {
    for d in DISCS.iter().copied().chain([-84, -260]) {
        let mut seen = std::collections::BTreeSet::new();
        let bound = 3 * (-d);
        for a in 1..=bound {
            for b in -bound..=bound {
                if (b * b - d) % (4 * a) != 0 {
                    continue;
                }
                let f = QuadForm::new(a, b, (b * b - d) / (4 * a));
                if f.is_primitive() {
                    seen.insert(reduce_form(f).unwrap().form);
                }
            }
        }
        let mut listed = enumerate_classes(d).unwrap();
        listed.sort();
        assert_eq!(listed, seen.into_iter().collect::<Vec<_>>(), "D={d}");
    }
}

/// Element `(r + s√D)/2`.
type Elt = (i64, i64);

fn elt_mul(d: i64, x: Elt, y: Elt) -> Elt {
    ((x.0 * y.0 + x.1 * y.1 * d) / 2, (x.0 * y.1 + x.1 * y.0) / 2)
}

/// The form of the product of the ideals `Z·a + Z·(−b + √D)/2`.
fn ideal_product(d: i64, f: QuadForm, g: QuadForm) -> QuadForm {
    let gf = [(2 * f.a, 0), (-f.b, 1)];
    let gg = [(2 * g.a, 0), (-g.b, 1)];
    let mut gens: Vec<Elt> = Vec::new();
    for x in gf {
        for y in gg {
            gens.push(elt_mul(d, x, y));
        }
    }
    // Hermite basis {(α, 0), (β, γ)} of the lattice spanned by the generators.
    let mut rows = gens;
    let pivot: Elt;
    let mut alpha = 0i64;
    loop {
        let (mut best, mut bi) = (i64::MAX, 0);
        for (i, r) in rows.iter().enumerate() {
            if r.1 != 0 && r.1.abs() < best {
                best = r.1.abs();
                bi = i;
            }
        }
        let p = rows[bi];
        let mut next = Vec::new();
        let mut done = true;
        for (i, r) in rows.iter().enumerate() {
            if i == bi {
                continue;
            }
            let k = Integer::div_floor(&r.1, &p.1);
            let nr = (r.0 - k * p.0, r.1 - k * p.1);
            if nr.1 != 0 {
                done = false;
            }
            next.push(nr);
        }
        if done {
            pivot = p;
            for r in &next {
                alpha = alpha.gcd(&r.0);
            }
            break;
        }
        next.push(p);
        rows = next;
    }
    let (beta, gamma) = pivot;
    let (beta, gamma) = if gamma < 0 { (-beta, -gamma) } else { (beta, gamma) };
    // ideal = γ·(Z·α/(2γ) + Z·(β/γ + √D)/2)
    let a = alpha / (2 * gamma);
    let b = -beta / gamma;
    let b = b.rem_euclid(2 * a);
    reduce_form(QuadForm::new(a, b, (b * b - d) / (4 * a))).unwrap().form
}

#[test]
fn composition_matches_ideal_multiplication() {
    for d in DISCS.iter().copied().chain([-84, -260, -199]) {
        let cl = enumerate_classes(d).unwrap();
        for f in &cl {
            for g in &cl {
                assert_eq!(compose_forms(*f, *g).unwrap(), ideal_product(d, *f, *g), "D={d} {f} {g}");
            }
        }
    }
}

#[test]
fn conjugation_is_inversion() {
    for d in DISCS.iter().copied().chain([-84, -260]) {
        let g = ClassGroup::new(d).unwrap();
        for i in 0..g.order() {
            let conj = g.class_of(g.classes()[i].opposite()).unwrap();
            assert_eq!(g.compose(i, conj), g.identity());
            assert_eq!(conj, g.conjugate_class(i));
        }
    }
}
