//! Exact scalar and linear algebra: rationals, cyclotomic fields `Q(zeta_L)`,
//! formal `i*pi`-multiples, and matrices over these with fraction-free
//! elimination.
//!
//! Everything here is immutable after construction and never touches floating
//! point (the one exception, [`CycNum::to_complex`], exists only so callers
//! can build independent numerical cross-checks).

mod cyclotomic;
mod matrix;
mod pi;
mod poly;
mod subspace;

pub use cyclotomic::{euler_phi, CycNum, Int, Rational};
pub use matrix::CycMatrix;
pub use pi::{pi_exp, PiScalar};
pub use poly::CycPoly;
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("level {from} does not divide target level {to}")]
    NonDivisibleLevel { from: u64, to: u64 },
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    #[error("pi-scalar factor is not a plain rational number")]
    NonRationalFactor,
    #[error("cyclotomic level out of supported range")]
    LevelOverflow,
    #[error("inconsistent linear system")]
    InconsistentSystem,
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
}

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Int::from(num), Int::from(den))
}

/// Convenience constructor for small integers as rationals.
pub fn rint(num: i64) -> Rational {
    Rational::from_integer(Int::from(num))
}
