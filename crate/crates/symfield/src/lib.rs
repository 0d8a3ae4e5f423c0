//! Exact multivariate Laurent rational functions over Q.
//!
//! Everything is exact: coefficients are arbitrary-precision integers and every
//! value is kept in a canonical reduced form, so `==` decides equality of
//! rational functions. Half-integral powers of `q` are handled by working with
//! `Q = q^{1/2}` as the base variable.

mod gcd;
mod matrix;
mod parse;
mod poly;
mod ratfunc;
mod var;

pub use gcd::{gcd, gcd_list, normalize};
pub use matrix::RatMatrix;
pub use parse::{parse, parse_with};
pub use poly::{Exps, Poly};
pub use ratfunc::RatFunc;
pub use var::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes identically under substitution")]
    VanishingDenominator,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("ragged rows")]
    Ragged,
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid variable name `{0}`")]
    BadVarName(String),
    #[error("variable `{0}` is not registered")]
    UnknownVar(String),
    #[error("not a power series in {0}")]
    NotPowerSeries(Var),
}

/// `q = Q²` as a rational function.
pub fn q() -> RatFunc {
    RatFunc::mono(&[(Var::Q, 2)])
}

/// `Q^k`.
pub fn qh(k: i32) -> RatFunc {
    RatFunc::mono(&[(Var::Q, k)])
}
