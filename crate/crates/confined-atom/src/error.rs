//! Error type shared by every module of the crate.
//!
//! Failures fall into three families: *physical* (the requested system has no
//! bound state, or a field configuration puts a channel exactly on a branch
//! cut), *numerical* (a root bracket without a sign change, quadrature that
//! cannot reach the requested tolerance), and *usage* (an argument outside a
//! documented domain). The messages are stable strings that the CLI maps onto
//! its exit codes, so downstream code may match on [`Error`] variants rather
//! than parsing text.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while solving the confined atom.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// The configuration violates the existence condition 2Za > 1.
    #[error("no bound state: Z ≤ 1/(2a)")]
    NoBoundState,

    /// A bracketed root search was started on an interval where the function
    /// does not change sign.
    #[error("no root in bracket")]
    NoRootInBracket,

    /// Adaptive quadrature exhausted its refinement budget before reaching
    /// the requested tolerance.
    #[error("quadrature failed")]
    QuadratureFailed,

    /// An argument lies outside the documented domain of a special function.
    #[error("argument out of supported range")]
    ArgumentOutOfRange,

    /// An asymptotic-series coefficient beyond the supported order was
    /// requested.
    #[error("coefficient index unsupported")]
    CoefficientIndexUnsupported,

    /// The Airy change of variables requires a nonzero static field.
    #[error("static-field scaling undefined")]
    StaticFieldScalingUndefined,

    /// A channel wave vector landed exactly on the continuum branch cut;
    /// a positive broadening η moves it off.
    #[error("on branch cut; increase eta")]
    OnBranchCut,

    /// Both the drive frequency and the broadening are zero, so the dynamic
    /// channel equations degenerate into the static one.
    #[error("degenerate channel: use static module")]
    DegenerateChannel,

    /// The requested finite-difference grid cannot place a point at x = 0.
    #[error("grid must contain origin")]
    GridMustContainOrigin,

    /// The linear system fixing the piecewise solution coefficients was
    /// singular. This indicates an internal inconsistency for valid inputs.
    #[error("degenerate matching system")]
    DegenerateMatchingSystem,

    /// A constructor was handed values outside its documented domain.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An iterative numerical routine failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),
}
