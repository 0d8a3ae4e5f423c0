//! Local and global computations for Bessel models of `GSp(4)`.
//!
//! * [`localrep`] — the four Iwahori-spherical representation types I, IIb,
//!   IIIa, VIb: Satake data, spinor/standard L-factors, ε-factors, t-factors.
//! * [`besselzeta`] — Hecke and Atkin–Lehner matrices on `K₀(p)`-fixed
//!   vectors, Bessel values at the identity, generating series of diagonal
//!   Bessel values, local zeta integrals and local periods, each computed both
//!   in closed form and through an independent geometric-series route.
//! * [`ramified`] — zeta integrals against a ramified twist, evaluated
//!   numerically by finite coset sums and compared with closed forms.
//! * [`globalasm`] — archimedean Γ-factors, global ε-factors, the spectral
//!   average prefactor and L-function composition identities.
//! * [`suites`] — the verification suites behind the `bz verify` command.
//!
//! Symbolic values are [`symfield::RatFunc`]s in `Q = q^{1/2}`, `T = q^{−s}`,
//! Satake parameters `A, B, G` (α, β, γ), twist value `U = μ(ϖ)` and Bessel
//! character value `L = Λ(ϖ)`.

pub mod besselzeta;
pub mod globalasm;
pub mod localrep;
pub mod numeric;
pub mod ramified;
pub mod suites;

use classgroup::ClassGroupError;
use padicring::PadicError;
use symfield::{SymError, Var};

pub use localrep::{LocalRep, RepType, TwistData};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Gsp4Error {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Padic(#[from] PadicError),
    #[error(transparent)]
    ClassGroup(#[from] ClassGroupError),
    #[error("L-factor is 1 by convention: the twist is ramified (conductor exponent {0})")]
    RamifiedTwist(u32),
    #[error("{op} does not support type {tag}")]
    Unsupported { op: &'static str, tag: RepType },
    #[error("inconsistent case: {0}")]
    InconsistentCase(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("non-unitary parameter: {0}")]
    NonUnitary(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("variable {0} has no numeric value")]
    Unbound(Var),
}

pub type Result<T, E = Gsp4Error> = std::result::Result<T, E>;
