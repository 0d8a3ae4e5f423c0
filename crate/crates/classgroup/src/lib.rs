//! Positive-definite binary quadratic forms of fundamental discriminant:
//! reduction with an explicit `SL₂(Z)` witness, Dirichlet composition, the
//! class group with its invariant factors, class-group characters and twisted
//! coefficient sums.

mod form;
mod group;

pub use form::{compose_forms, is_fundamental, reduce_form, t_theta, Mat, QuadForm, Reduction};
pub use group::{bessel_coeff_sum, enumerate_classes, w_d, ClassChar, ClassGroup};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassGroupError {
    #[error("form {0} is not positive definite")]
    NotPositiveDefinite(QuadForm),
    #[error("form {0} is not primitive")]
    NotPrimitive(QuadForm),
    #[error("{0} is not a negative fundamental discriminant")]
    NotFundamental(i64),
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(i64, i64),
    #[error("t² − 4n ≠ D for t = {t}, n = {n}, D = {d}")]
    ThetaMismatch { d: i64, t: i64, n: i64 },
    #[error("reduced form {0} is missing from the class list")]
    MissingClass(QuadForm),
    #[error("could not find a basis adapted to the invariant factors")]
    Structure,
    #[error("expected {expected} coefficients, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}
