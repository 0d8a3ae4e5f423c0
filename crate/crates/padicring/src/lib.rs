//! Residue rings `Z/p^e`, the unramified quadratic Galois ring `GR(p^e, 2)`,
//! multiplicative and additive characters, and brute-force evaluation of the
//! associated Gauss and character sums.
//!
//! Only odd primes are supported: the unit group of `Z/2^e` is not cyclic.
//! Character values are roots of unity stored as integer exponents and only
//! converted to floating point inside the summation kernels. Kernels are
//! chunked so that sequential and parallel (`parallel` feature) execution
//! produce bit-identical results.

mod character;
mod dirichlet;
mod exec;
mod ring;
mod smith;
mod sums;

pub use character::{characters_with_conductor, root_of_unity, AddChar, MultChar};
pub use dirichlet::DirichletChar;
pub use exec::{sum_range, Exec, CHUNK};
pub use ring::{reduce, GElem, GaloisRing, ResidueRing, MAX_MODULUS};
pub use smith::{det2, ord_p, smith_form_2x2, y_eta_check, Mat2, Smith, SymForm, YEtaReport};
pub use sums::{
    gauss_sum_f, gauss_sum_f_with, gauss_sum_l, gauss_sum_l_with, norm_char_sum, norm_char_sum_closed,
    norm_char_sum_with, norm_is_surjective, unit_integral, unit_integral_closed, unit_integral_l,
    unit_integral_with,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PadicError {
    #[error("p = 2 is not supported: the unit group of Z/2^e is not cyclic")]
    EvenPrime,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent e must be positive")]
    ZeroExponent,
    #[error("Z/{p}^{e} is too large to tabulate")]
    TooLarge { p: u64, e: u32 },
    #[error("{0} is not a unit")]
    NotUnit(u64),
    #[error("character has conductor {found}, expected {expected}")]
    ConductorMismatch { expected: u32, found: u32 },
    #[error("matrix is singular")]
    Singular,
    #[error("precondition failed: {0}")]
    Precondition(String),
}
