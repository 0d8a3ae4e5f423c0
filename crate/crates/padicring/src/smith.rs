//! Smith normal form of 2×2 integer matrices and the determinant/elementary
//! divisor check for the matrices `Y_η = −a²S^† + X_η`.

use crate::ring::{reduce, GaloisRing, ResidueRing};
use crate::PadicError;

pub type Mat2 = [[i128; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0i128; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn det2(m: &Mat2) -> i128 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// `U·M·V = diag(d1, d2)` with `U, V ∈ GL₂(Z)`, `0 < d1`, `d1 | d2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub d1: i128,
    pub d2: i128,
    pub u: Mat2,
    pub v: Mat2,
}

impl Smith {
    /// Recompute `U·M·V` and confirm it is the stored diagonal, with unimodular
    /// transforms and the divisibility condition.
    pub fn verify(&self, m: &Mat2) -> bool {
        let d = mat_mul(&mat_mul(&self.u, m), &self.v);
        d == [[self.d1, 0], [0, self.d2]]
            && det2(&self.u).abs() == 1
            && det2(&self.v).abs() == 1
            && self.d1 > 0
            && self.d2 % self.d1 == 0
    }
}

fn swap_rows(a: &mut Mat2, u: &mut Mat2) {
    a.swap(0, 1);
    u.swap(0, 1);
}

fn swap_cols(a: &mut Mat2, v: &mut Mat2) {
    for r in [&mut *a, &mut *v] {
        for row in r.iter_mut() {
            row.swap(0, 1);
        }
    }
}

/// Smith normal form of a nonsingular 2×2 integer matrix.
pub fn smith_form_2x2(m: &Mat2) -> Result<Smith, PadicError> {
    if det2(m) == 0 {
        return Err(PadicError::Singular);
    }
    let mut a = *m;
    let mut u: Mat2 = [[1, 0], [0, 1]];
    let mut v: Mat2 = [[1, 0], [0, 1]];
    loop {
        // Move the smallest nonzero entry to (0,0).
        let (mut bi, mut bj) = (0, 0);
        for i in 0..2 {
            for j in 0..2 {
                if a[i][j] != 0 && (a[bi][bj] == 0 || a[i][j].abs() < a[bi][bj].abs()) {
                    (bi, bj) = (i, j);
                }
            }
        }
        if bi == 1 {
            swap_rows(&mut a, &mut u);
        }
        if bj == 1 {
            swap_cols(&mut a, &mut v);
        }
        let piv = a[0][0];
        let qr = a[1][0] / piv;
        for j in 0..2 {
            a[1][j] -= qr * a[0][j];
            u[1][j] -= qr * u[0][j];
        }
        let qc = a[0][1] / piv;
        for i in 0..2 {
            a[i][1] -= qc * a[i][0];
            v[i][1] -= qc * v[i][0];
        }
        if a[1][0] != 0 || a[0][1] != 0 {
            continue;
        }
        if a[1][1] % piv != 0 {
            // Fold row 1 into row 0 and keep reducing.
            for j in 0..2 {
                a[0][j] += a[1][j];
                u[0][j] += u[1][j];
            }
            continue;
        }
        break;
    }
    for i in 0..2 {
        if a[i][i] < 0 {
            for j in 0..2 {
                a[i][j] = -a[i][j];
                u[i][j] = -u[i][j];
            }
        }
    }
    Ok(Smith { d1: a[0][0], d2: a[1][1], u, v })
}

/// p-adic valuation of a nonzero integer.
pub fn ord_p(mut n: i128, p: u64) -> u32 {
    assert!(n != 0, "valuation of zero");
    let p = p as i128;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Integral binary form `S = [[a, b/2], [b/2, c]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl SymForm {
    /// `d = b² − 4ac`.
    pub fn disc(&self) -> i128 {
        (self.b as i128).pow(2) - 4 * self.a as i128 * self.c as i128
    }

    /// Norm of `β₂·a + β₃·θ₀` where `{a, θ₀}` is the integral basis of `o_L`
    /// (`θ₀` has trace `b` and norm `ac`): `a(aβ₂² + bβ₂β₃ + cβ₃²)`.
    pub fn norm(&self, b2: i64, b3: i64) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        let (x, y) = (b2 as i128, b3 as i128);
        a * (a * x * x + b * x * y + c * y * y)
    }
}

/// Outcome of [`y_eta_check`]. Matrices are stored scaled by `2a` (a p-adic
/// unit), which makes them integral without changing p-adic elementary divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YEtaReport {
    /// `2a·Y_η`.
    pub y_scaled: Mat2,
    /// `det Y_η = −a⁴d/4 − a⁻²N(η)` (checked as `det(2aY) = −a⁶d − 4N`).
    pub det_identity: bool,
    /// `tr(Y_η S) = a²d/2`.
    pub trace_identity: bool,
    /// `j = ord_p(a⁶d/4 + N(η))`.
    pub j: u32,
    pub smith: Smith,
    /// p-adic orders of the elementary divisors.
    pub divisor_orders: (u32, u32),
    /// Elementary divisors are `(1, p^j)` up to units.
    pub smith_claim: bool,
    /// Norm computed in `GR(p^e,2)` with `δ = d` agrees mod `p^e` (only when `d`
    /// is a non-residue mod `p`, i.e. `L/F` is inert).
    pub galois_norm_agrees: Option<bool>,
}

/// Verify the determinant identity, the trace identity and the Smith form claim
/// `Y_η ∈ o_L^×·diag(p^j, 1)·GL₂(Z_p)` for `η = β₂a + β₃θ₀`.
pub fn y_eta_check(s: SymForm, beta: (i64, i64), p: u64, e: u32) -> Result<YEtaReport, PadicError> {
    ResidueRing::new(p, e)?;
    let pi = p as i128;
    let (a, b, c) = (s.a as i128, s.b as i128, s.c as i128);
    if a % pi == 0 {
        return Err(PadicError::Precondition(format!("a = {a} is not a unit at p = {p}")));
    }
    let d = s.disc();
    if d == 0 || d % pi == 0 {
        return Err(PadicError::Precondition(format!("d/2 = {d}/2 is not a unit at p = {p}")));
    }
    let (b2, b3) = (beta.0 as i128, beta.1 as i128);
    let n = s.norm(beta.0, beta.1);
    let a3 = a * a * a;
    let z: Mat2 = [[-2 * a3 * c - 2 * (b * b2 + c * b3), a3 * b + 2 * a * b2], [a3 * b + 2 * a * b2, -2 * a3 * a + 2 * a * b3]];
    let target = a3 * a3 * d + 4 * n;
    if target == 0 {
        return Err(PadicError::Precondition("a⁶d/4 + N(η) = 0, Y_η is singular".into()));
    }
    let j = ord_p(target, p);
    if j > e {
        return Err(PadicError::Precondition(format!("ord_p(a⁶d/4 + N(η)) = {j} exceeds e = {e}")));
    }
    let det_identity = det2(&z) == -target;
    let two_s: Mat2 = [[2 * a, b], [b, 2 * c]];
    let zs = mat_mul(&z, &two_s);
    let trace_identity = zs[0][0] + zs[1][1] == 2 * a3 * d;
    let smith = smith_form_2x2(&z)?;
    let divisor_orders = (ord_p(smith.d1, p), ord_p(smith.d2, p));
    let smith_claim = smith.verify(&z) && divisor_orders == (0, j);
    let galois_norm_agrees = GaloisRing::with_delta(p, e, (d % (i64::MAX as i128)) as i64).ok().map(|gr| {
        let m = gr.base().modulus();
        let half = gr.base().inv(2).expect("p odd");
        let bh = gr.base().mul(gr.base().reduce(s.b), half);
        let x = (gr.base().mul(gr.base().reduce(beta.0), gr.base().reduce(s.a)) + gr.base().mul(gr.base().reduce(beta.1), bh)) % m;
        let y = gr.base().mul((m - gr.base().reduce(beta.1)) % m, half);
        gr.norm(gr.elem(x as i64, y as i64)) == reduce((n % m as i128) as i64, m)
    });
    Ok(YEtaReport { y_scaled: z, det_identity, trace_identity, j, smith, divisor_orders, smith_claim, galois_norm_agrees })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_diagonal() {
        let s = smith_form_2x2(&[[1, 0], [0, 1]]).unwrap();
        assert_eq!((s.d1, s.d2), (1, 1));
        let m = [[125, 0], [0, 1]];
        let s = smith_form_2x2(&m).unwrap();
        assert_eq!((s.d1, s.d2), (1, 125));
        assert!(s.verify(&m));
    }

    #[test]
    fn non_divisible_diagonal_is_fixed() {
        let m = [[4, 0], [0, 6]];
        let s = smith_form_2x2(&m).unwrap();
        assert_eq!((s.d1, s.d2), (2, 12));
        assert!(s.verify(&m));
    }

    #[test]
    fn singular_rejected() {
        assert_eq!(smith_form_2x2(&[[2, 4], [1, 2]]).unwrap_err(), PadicError::Singular);
    }

    #[test]
    fn y_eta_unit_form() {
        let s = SymForm { a: 1, b: 0, c: 1 };
        let r = y_eta_check(s, (0, 0), 5, 2).unwrap();
        assert!(r.det_identity && r.trace_identity && r.smith_claim);
        assert_eq!(r.j, 0);
        // N(η) = 16 ≡ 1 mod 5: a⁶d/4 + N = 15, j = 1.
        let r = y_eta_check(s, (4, 0), 5, 2).unwrap();
        assert_eq!(r.j, 1);
        assert_eq!(r.divisor_orders, (0, 1));
        assert!(r.smith_claim);
        // d = −4 is a square mod 5: no Galois-ring comparison.
        assert_eq!(r.galois_norm_agrees, None);
    }

    #[test]
    fn y_eta_inert_case_checks_galois_norm() {
        // d = −3 is a non-residue mod 5.
        let s = SymForm { a: 1, b: 1, c: 1 };
        let r = y_eta_check(s, (2, 3), 5, 2).unwrap();
        assert_eq!(r.galois_norm_agrees, Some(true));
        assert!(r.det_identity && r.trace_identity && r.smith_claim);
    }

    #[test]
    fn preconditions() {
        assert!(y_eta_check(SymForm { a: 5, b: 0, c: 1 }, (0, 0), 5, 1).is_err());
        assert!(y_eta_check(SymForm { a: 1, b: 1, c: 4 }, (0, 0), 3, 1).is_err()); // d = −15
    }
}
