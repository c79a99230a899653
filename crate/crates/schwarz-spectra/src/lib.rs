//! Direct and inverse spectral problems for Schwarz matrices.
//!
//! A Schwarz matrix is the tridiagonal-like matrix with `-b0` in the top-left
//! corner, a unit superdiagonal, and `-b_k` on the subdiagonal, all `b_k`
//! nonzero. This crate connects three views of the same data and lets each
//! verify the others:
//!
//! * the **polynomial** view: characteristic polynomials, their even/odd
//!   parts, Hurwitz determinants and the continued-fraction expansion whose
//!   partial denominators are exactly `b0 .. b_{n-1}` ([`wall`]);
//! * the **sign-pattern** view: the signs of `b` alone decide how the
//!   spectrum splits between half-planes and whether the characteristic
//!   polynomial is Hurwitz stable, (almost) generalized Hurwitz of some
//!   order, or self-interlacing ([`schwarz`], [`classify`]);
//! * the **spectral** view: inverse solvers reconstruct the unique matrix
//!   with a given spectrum under each admissible sign pattern ([`inverse`]),
//!   and a numerical oracle supplies ground-truth roots and eigenvalues for
//!   every theorem-level test ([`oracle`]).
//!
//! Arithmetic is exact-rational by default ([`scalar::Rat`]); a parallel
//! `f64` backend serves the oracle and irrational user input. See the
//! `examples/` directory for one runnable walkthrough per capability and
//! [`cli`] for the command-line front end.

pub mod classify;
pub mod cli;
pub mod error;
pub mod hurwitz;
pub mod inverse;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod schwarz;
pub mod spectrum;
pub mod wall;

pub use classify::{Classification, HwType, Kind};
pub use error::{Error, Result};
pub use poly::Poly;
pub use scalar::{Rat, Scalar, Sign};
pub use schwarz::{SchwarzMatrix, SnView};
pub use spectrum::Spectrum;
pub use wall::WallCoefficients;
