//! Integral binary quadratic forms `ax² + bxy + cy²` of negative discriminant.

use std::fmt;

use num_integer::Integer;

use crate::ClassGroupError;

/// 2×2 integer matrix acting on column vectors `(x, y)`.
pub type Mat = [[i64; 2]; 2];

const IDENTITY: Mat = [[1, 0], [0, 1]];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// The form `(a, b, c)`, i.e. the symmetric matrix `[[a, b/2], [b/2, c]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> QuadForm {
        QuadForm { a, b, c }
    }

    /// `D = b² − 4ac`.
    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a > 0 && self.disc() < 0
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    /// `|b| ≤ a ≤ c`, with `b ≥ 0` when `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        b.abs() <= a && a <= c && !((b.abs() == a || a == c) && b < 0)
    }

    /// `−det` of the matrix `[[a, b/2], [b/2, c]]` times 4, which equals `D`.
    pub fn neg_four_det(&self) -> i64 {
        -(4 * self.a * self.c - self.b * self.b)
    }

    /// Value at `(x, y)`.
    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    /// The form `v ↦ f(W v)`.
    pub fn transform(&self, w: &Mat) -> QuadForm {
        let [[p, q], [r, s]] = *w;
        QuadForm {
            a: self.eval(p, r),
            b: 2 * self.a * p * q + self.b * (p * s + q * r) + 2 * self.c * r * s,
            c: self.eval(q, s),
        }
    }

    /// `(a, −b, c)`.
    pub fn opposite(&self) -> QuadForm {
        QuadForm { a: self.a, b: -self.b, c: self.c }
    }
}

/// Reduced form together with `W ∈ SL₂(Z)` such that `reduced = f ∘ W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub form: QuadForm,
    pub witness: Mat,
}

/// Gauss reduction of a positive-definite form.
pub fn reduce_form(f: QuadForm) -> Result<Reduction, ClassGroupError> {
    if !f.is_positive_definite() {
        return Err(ClassGroupError::NotPositiveDefinite(f));
    }
    let mut g = f;
    let mut w = IDENTITY;
    loop {
        // Translate b into (−a, a]: (x, y) ↦ (x + ky, y).
        let two_a = 2 * g.a;
        let k = Integer::div_floor(&(g.a - g.b), &two_a);
        if k != 0 {
            let t = [[1, k], [0, 1]];
            g = g.transform(&t);
            w = mat_mul(&w, &t);
        }
        if g.a > g.c {
            // (x, y) ↦ (−y, x) swaps a and c.
            let s = [[0, -1], [1, 0]];
            g = g.transform(&s);
            w = mat_mul(&w, &s);
            continue;
        }
        if g.a == g.c && g.b < 0 {
            let s = [[0, -1], [1, 0]];
            g = g.transform(&s);
            w = mat_mul(&w, &s);
        }
        break;
    }
    debug_assert!(g.is_reduced());
    Ok(Reduction { form: g, witness: w })
}

/// Whether `d < 0` is a fundamental discriminant.
pub fn is_fundamental(d: i64) -> bool {
    fn squarefree(n: i64) -> bool {
        let mut k = 2;
        while k * k <= n {
            if n % (k * k) == 0 {
                return false;
            }
            k += 1;
        }
        true
    }
    if d >= 0 {
        return false;
    }
    let m = -d;
    if d.rem_euclid(4) == 1 {
        return squarefree(m);
    }
    if m % 4 == 0 {
        let r = (d / 4).rem_euclid(4);
        return (r == 2 || r == 3) && squarefree(m / 4);
    }
    false
}

/// Dirichlet composition of two primitive forms of the same discriminant,
/// followed by reduction.
pub fn compose_forms(f: QuadForm, g: QuadForm) -> Result<QuadForm, ClassGroupError> {
    let d = f.disc();
    if g.disc() != d {
        return Err(ClassGroupError::DiscriminantMismatch(d, g.disc()));
    }
    if !f.is_primitive() {
        return Err(ClassGroupError::NotPrimitive(f));
    }
    if !g.is_primitive() {
        return Err(ClassGroupError::NotPrimitive(g));
    }
    let (f1, f2) = if f.a > g.a { (g, f) } else { (f, g) };
    let (a1, b1) = (f1.a as i128, f1.b as i128);
    let (a2, b2, c2) = (f2.a as i128, f2.b as i128, f2.c as i128);
    let s = (b1 + b2) / 2;
    let n = b2 - s;
    // u·a2 + v·a1 = d0
    let (d0, y1) = if a2 % a1 == 0 {
        (a1, 0)
    } else {
        let e = a2.extended_gcd(&a1);
        (e.gcd, e.x)
    };
    let (d1, x2, y2) = if s % d0 == 0 {
        (d0, 0, -1)
    } else {
        let e = s.extended_gcd(&d0);
        (e.gcd, e.x, -e.y)
    };
    let v1 = a1 / d1;
    let v2 = a2 / d1;
    let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1);
    let b3 = b2 + 2 * v2 * r;
    let a3 = v1 * v2;
    let c3 = (b3 * b3 - d as i128) / (4 * a3);
    let h = QuadForm { a: a3 as i64, b: b3 as i64, c: c3 as i64 };
    debug_assert_eq!(h.disc(), d);
    Ok(reduce_form(h)?.form)
}

/// The form `(1, t, n)` attached to `θ` with `tr θ = t`, `N θ = n`, `t² − 4n = D`.
pub fn t_theta(d: i64, t: i64, n: i64) -> Result<QuadForm, ClassGroupError> {
    if t * t - 4 * n != d {
        return Err(ClassGroupError::ThetaMismatch { d, t, n });
    }
    let f = QuadForm { a: 1, b: t, c: n };
    if !f.is_positive_definite() {
        return Err(ClassGroupError::NotPositiveDefinite(f));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_form(QuadForm::new(1, 1, 6)).unwrap().form, QuadForm::new(1, 1, 6));
        assert_eq!(reduce_form(QuadForm::new(6, 1, 1)).unwrap().form, QuadForm::new(1, 1, 6));
        assert_eq!(reduce_form(QuadForm::new(3, 5, 3)).unwrap().form, QuadForm::new(1, 1, 3));
        assert_eq!(reduce_form(QuadForm::new(2, -2, 2)).unwrap().form, QuadForm::new(2, 2, 2));
        assert!(reduce_form(QuadForm::new(-1, 0, 1)).is_err());
    }

    #[test]
    fn witness_is_special_linear() {
        for f in [QuadForm::new(6, 1, 1), QuadForm::new(31, 45, 17), QuadForm::new(3, 5, 3)] {
            let r = reduce_form(f).unwrap();
            let [[p, q], [s, t]] = r.witness;
            assert_eq!(p * t - q * s, 1);
            assert_eq!(f.transform(&r.witness), r.form);
        }
    }

    #[test]
    fn fundamental_discriminants() {
        let fund: Vec<i64> = (-50..0).filter(|d| is_fundamental(*d)).collect();
        assert_eq!(fund, vec![-47, -43, -40, -39, -35, -31, -24, -23, -20, -19, -15, -11, -8, -7, -4, -3]);
    }

    #[test]
    fn composition_examples() {
        let (f, g) = (QuadForm::new(2, 1, 3), QuadForm::new(2, -1, 3));
        assert_eq!(compose_forms(f, g).unwrap(), QuadForm::new(1, 1, 6));
        assert_eq!(compose_forms(f, f).unwrap(), g);
        assert!(compose_forms(f, QuadForm::new(1, 1, 1)).is_err());
    }

    #[test]
    fn t_theta_examples() {
        assert_eq!(t_theta(-4, 0, 1).unwrap(), QuadForm::new(1, 0, 1));
        assert_eq!(t_theta(-23, 1, 6).unwrap(), QuadForm::new(1, 1, 6));
        assert_eq!(t_theta(-23, 1, 6).unwrap().neg_four_det(), -23);
        assert!(t_theta(-23, 1, 5).is_err());
    }
}
