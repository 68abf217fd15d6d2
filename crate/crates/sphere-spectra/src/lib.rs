//! Exact spectra of conformally invariant spin operators on round spheres.
//!
//! Sections of a homogeneous spinor bundle over Sⁿ split into isotypic
//! summands under Spin(n+1), one per branching-admissible highest weight, and
//! the conformally invariant operators studied here act as a scalar on each
//! summand. This crate computes those scalars two independent ways, entirely
//! in exact rational arithmetic:
//!
//! * [`engine`] — the spectrum-generating technique: transition quotients
//!   between lattice-adjacent summands, propagated from one normalized base
//!   eigenvalue;
//! * [`closed_form`] — direct eigenvalue formulas: the first-order higher
//!   spin operators (Dirac and Rarita-Schwinger for k = 0, 1) and their
//!   even-dimensional squares, Gamma-ratio spectral functions of any odd
//!   order, the form-family operators P_k and T_{k−1}T*_{k−1}, and the
//!   factored odd-order operators built from them.
//!
//! [`weights`] provides dominant weights and the branching lattice,
//! [`rep`] the Casimir/Bochner/Weyl-dimension backend the engine rests on,
//! [`verify`] the consistency suites that compare all of the above, and
//! [`tables`] + [`cli`] the serialized table formats and the command-line
//! front end. Start with the runnable examples in `examples/`.

pub mod cli;
pub mod closed_form;
pub mod engine;
mod error;
pub mod gamma;
pub mod half;
pub mod rep;
pub mod tables;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use half::Half;

/// Exact scalar type used for every eigenvalue, Casimir value, and quotient:
/// an arbitrary-precision rational kept in canonical form.
pub type Rational = num_rational::BigRational;

/// Shorthand rational constructor.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(num_bigint::BigInt::from(numer), num_bigint::BigInt::from(denom))
}
