use std::fmt;

use crate::gcd::gcd;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::SymError;

/// Dense matrix of rational functions.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix { rows, cols, data: vec![RatFunc::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<RatMatrix, SymError> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(SymError::Ragged);
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(d: &[RatFunc]) -> RatMatrix {
        let mut m = RatMatrix::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    /// Column vector.
    pub fn column(v: &[RatFunc]) -> RatMatrix {
        RatMatrix { rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// Row vector.
    pub fn row(v: &[RatFunc]) -> RatMatrix {
        RatMatrix { rows: 1, cols: v.len(), data: v.to_vec() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.data
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&RatFunc) -> Result<RatFunc, SymError>) -> Result<RatMatrix, SymError> {
        let data: Result<Vec<_>, _> = self.data.iter().map(f).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data: data? })
    }

    fn check_same(&self, other: &RatMatrix, op: &'static str) -> Result<(), SymError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(SymError::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, SymError> {
        self.check_same(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix, SymError> {
        self.check_same(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, k: &RatFunc) -> RatMatrix {
        self.map(|x| x.mul(k))
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, SymError> {
        if self.cols != other.rows {
            return Err(SymError::DimensionMismatch {
                op: "mul",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RatFunc::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Result<RatFunc, SymError> {
        if !self.is_square() {
            return Err(SymError::NotSquare(self.rows, self.cols));
        }
        Ok((0..self.rows).fold(RatFunc::zero(), |acc, i| acc.add(self.get(i, i))))
    }

    /// Substitute in every entry.
    pub fn subst(&self, bindings: &[(crate::Var, RatFunc)]) -> Result<RatMatrix, SymError> {
        self.try_map(|x| x.subst(bindings))
    }

    /// Row `r` scaled to polynomial entries; returns (scaled row, scale factor).
    fn clear_row(&self, r: usize) -> (Vec<Poly>, Poly) {
        let mut l = Poly::one();
        for j in 0..self.cols {
            let d = self.get(r, j).den();
            if d.is_one() {
                continue;
            }
            let g = gcd(&l, d);
            l = l.mul(&d.exact_div(&g).expect("gcd divides"));
        }
        let row = (0..self.cols)
            .map(|j| {
                let e = self.get(r, j);
                e.num().mul(&l.exact_div(e.den()).expect("lcm divisible"))
            })
            .collect();
        (row, l)
    }

    /// Bareiss elimination of `[A | B]` where `A` is this (square) matrix with
    /// rows cleared of denominators. Returns `(upper, rhs, pivot, sign, row scales)`.
    #[allow(clippy::type_complexity)]
    fn bareiss(&self, rhs_cols: usize, rhs: impl Fn(usize, usize, &Poly) -> Poly) -> Option<(Vec<Vec<Poly>>, Poly, i32, Vec<Poly>)> {
        let n = self.rows;
        let w = n + rhs_cols;
        let mut scales = Vec::with_capacity(n);
        let mut a: Vec<Vec<Poly>> = (0..n)
            .map(|r| {
                let (mut row, l) = self.clear_row(r);
                for c in 0..rhs_cols {
                    row.push(rhs(r, c, &l));
                }
                scales.push(l);
                row
            })
            .collect();
        let mut sign = 1;
        let mut prev = Poly::one();
        for k in 0..n {
            let piv = (k..n).filter(|&i| !a[i][k].is_zero()).min_by_key(|&i| a[i][k].nterms())?;
            if piv != k {
                a.swap(piv, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..w {
                    let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = t.exact_div(&prev).expect("Bareiss step is exact");
                }
                a[i][k] = Poly::zero();
            }
            prev = a[k][k].clone();
        }
        Some((a, prev, sign, scales))
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<RatFunc, SymError> {
        if !self.is_square() {
            return Err(SymError::NotSquare(self.rows, self.cols));
        }
        if self.rows == 0 {
            return Ok(RatFunc::one());
        }
        let Some((_, pivot, sign, scales)) = self.bareiss(0, |_, _, _| Poly::zero()) else {
            return Ok(RatFunc::zero());
        };
        let den = scales.iter().fold(Poly::one(), |acc, s| acc.mul(s));
        let num = if sign < 0 { pivot.neg() } else { pivot };
        RatFunc::new(num, den)
    }

    /// Exact inverse by fraction-free Gaussian elimination.
    pub fn inverse(&self) -> Result<RatMatrix, SymError> {
        if !self.is_square() {
            return Err(SymError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let (a, pivot, _, _) = self
            .bareiss(n, |r, c, l| if r == c { l.clone() } else { Poly::zero() })
            .ok_or(SymError::Singular)?;
        let mut out = RatMatrix::zeros(n, n);
        for c in 0..n {
            // y = pivot * x, integral; back-substitution divisions are exact.
            let mut y: Vec<Poly> = vec![Poly::zero(); n];
            for i in (0..n).rev() {
                let mut t = pivot.mul(&a[i][n + c]);
                for j in i + 1..n {
                    if !a[i][j].is_zero() && !y[j].is_zero() {
                        t = t.sub(&a[i][j].mul(&y[j]));
                    }
                }
                y[i] = match t.exact_div(&a[i][i]) {
                    Some(q) => q,
                    // Row swaps can break integrality of y; fall back to field arithmetic.
                    None => return self.inverse_field(),
                };
            }
            for (i, yi) in y.iter().enumerate() {
                out.set(i, c, RatFunc::new(yi.clone(), pivot.clone())?);
            }
        }
        Ok(out)
    }

    /// Gauss–Jordan over the rational-function field (reference path).
    pub fn inverse_field(&self) -> Result<RatMatrix, SymError> {
        if !self.is_square() {
            return Err(SymError::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for k in 0..n {
            let piv = (k..n).find(|&i| !a.get(i, k).is_zero()).ok_or(SymError::Singular)?;
            if piv != k {
                for j in 0..n {
                    a.data.swap(piv * n + j, k * n + j);
                    inv.data.swap(piv * n + j, k * n + j);
                }
            }
            let p = a.get(k, k).inv()?;
            for j in 0..n {
                a.set(k, j, a.get(k, j).mul(&p));
                inv.set(k, j, inv.get(k, j).mul(&p));
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    a.set(i, j, a.get(i, j).sub(&f.mul(a.get(k, j))));
                    inv.set(i, j, inv.get(i, j).sub(&f.mul(inv.get(k, j))));
                }
            }
        }
        Ok(inv)
    }

    /// `(I − x·M)⁻¹`, the closed form of `Σ_{l≥0} M^l x^l`.
    pub fn geom_resolvent(&self, x: &RatFunc) -> Result<RatMatrix, SymError> {
        if !self.is_square() {
            return Err(SymError::NotSquare(self.rows, self.cols));
        }
        let a = RatMatrix::identity(self.rows).sub(&self.scale(x))?;
        a.inverse()
    }

    /// Rows of canonical entry texts.
    pub fn to_text_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_text()).collect()).collect()
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in self.to_text_rows() {
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Var;

    fn v(x: Var) -> RatFunc {
        RatFunc::var(x)
    }

    #[test]
    fn resolvent_of_zero_is_identity() {
        let m = RatMatrix::zeros(3, 3);
        assert_eq!(m.geom_resolvent(&v(Var::X)).unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn scalar_resolvent() {
        let m = RatMatrix::from_rows(vec![vec![v(Var::A)]]).unwrap();
        let r = m.geom_resolvent(&v(Var::X)).unwrap();
        let want = RatFunc::one().div(&(RatFunc::one() - v(Var::A) * v(Var::X))).unwrap();
        assert_eq!(r.get(0, 0), &want);
    }

    #[test]
    fn inverse_matches_field_path() {
        let m = RatMatrix::from_rows(vec![
            vec![v(Var::A), RatFunc::int(1), RatFunc::zero()],
            vec![v(Var::B).div(&v(Var::Q)).unwrap(), v(Var::G), RatFunc::int(2)],
            vec![RatFunc::zero(), v(Var::T), RatFunc::frac(1, 3)],
        ])
        .unwrap();
        let a = m.inverse().unwrap();
        let b = m.inverse_field().unwrap();
        assert_eq!(a, b);
        assert_eq!(m.mul(&a).unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn pivoting_on_zero_diagonal() {
        let m = RatMatrix::from_rows(vec![
            vec![RatFunc::zero(), v(Var::A)],
            vec![v(Var::B), RatFunc::int(1)],
        ])
        .unwrap();
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), RatMatrix::identity(2));
        assert_eq!(m.det().unwrap(), -(v(Var::A) * v(Var::B)));
    }

    #[test]
    fn singular_is_error() {
        let m = RatMatrix::from_rows(vec![
            vec![v(Var::A), v(Var::B)],
            vec![v(Var::A) * v(Var::G), v(Var::B) * v(Var::G)],
        ])
        .unwrap();
        assert_eq!(m.inverse(), Err(SymError::Singular));
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn dimension_checks() {
        let a = RatMatrix::zeros(2, 3);
        let b = RatMatrix::zeros(2, 3);
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b).is_ok());
        assert!(a.trace().is_err());
    }
}
