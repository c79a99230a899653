//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong while analysing or reconstructing a Schwarz
/// matrix. Theorem preconditions get their own variants so callers (and the
/// CLI exit-code table) can tell a degenerate input from a malformed one.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A nonreal root has no conjugate partner in the spectrum.
    #[error("spectrum not closed under conjugation: {0} has no conjugate partner")]
    ConjugationViolation(String),

    /// Standard sign-change counting hit an exact zero.
    #[error("sign sequence has a zero entry at position {0}")]
    ZeroEntry(usize),

    /// Frobenius counting needs nonzero first and last entries.
    #[error("Frobenius sign counting needs nonzero first and last entries")]
    BoundaryZero,

    /// A Hurwitz determinant needed by the current operation vanishes.
    #[error("Hurwitz determinant Δ{0} vanishes")]
    DegenerateHurwitz(usize),

    /// The Euclid recursion lost more than one degree at step `k`,
    /// which signals Δ_k = 0.
    #[error("degree collapse at step {0} of the Euclid recursion (Δ{0} = 0)")]
    DegreeCollapse(usize),

    /// Operation requires p(0) ≠ 0.
    #[error("polynomial vanishes at z = 0")]
    VanishesAtZero,

    /// Float-backend root bookkeeping could not decide an interval membership.
    #[error("root {0} sits within tolerance of an interval boundary")]
    ToleranceAmbiguity(String),

    /// A spectrum handed to the stable solver has a root with Re ≥ 0.
    #[error("spectrum is not stable: {0} has nonnegative real part")]
    SpectrumNotStable(String),

    /// A spectrum violates the strictly alternating pattern required here.
    #[error("spectrum violates the required root pattern: {0}")]
    PatternMismatch(String),

    /// A Hurwitz determinant has the wrong sign for the requested sign pattern.
    #[error("sign-pattern precondition failed: Δ{index} is {actual}, expected {expected}")]
    SignPatternPreconditionFailed {
        index: usize,
        expected: &'static str,
        actual: &'static str,
    },

    /// The fields of an S_n view violate its invariants.
    #[error("invalid S_n sign-pattern view: {0}")]
    InvalidPattern(String),

    /// The trace of the requested matrix would not be positive.
    #[error("sum of the spectrum is {0}; the inverse problem needs a positive sum")]
    SumNotPositive(String),

    /// A spectrum matches none of the four admissible root distributions.
    #[error("spectrum matches none of the four admissible root distributions")]
    CaseMismatch,

    /// The iterative root solver ran out of budget.
    #[error("root finder failed to converge within the iteration budget")]
    ConvergenceFailure,

    /// A quantity that must be nonzero (matrix entry, leading coefficient) is zero.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A literal or JSON document failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// The polynomial is not (almost) generalized Hurwitz, so the requested
    /// order computation is undefined.
    #[error("polynomial is not generalized Hurwitz: {0}")]
    NotGeneralizedHurwitz(String),

    /// A theorem-level identity failed; this indicates a bug, not bad input.
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
