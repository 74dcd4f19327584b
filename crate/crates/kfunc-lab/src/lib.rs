//! Numerics for K-functionals of interpolation couples over step-function data.
//!
//! The crate works with finitely piecewise-constant data, for which every
//! quantity below is computable exactly (up to binary64 rounding):
//!
//! - [`stepfn`]: exact algebra of nonnegative step functions on `(0, ∞)`:
//!   evaluation, integration, distribution functions, decreasing
//!   rearrangement and the measure-weighted rearrangement merge.
//! - [`kfunc`]: K-functional profiles `t ↦ K(t)` stored through their
//!   nonincreasing derivative `k`, built from weighted scalar couples or
//!   from `(L1, L∞)` level data.
//! - [`alloc`]: the vector-valued / measure-weighted K-functional as a
//!   supremum over budget allocations, solved exactly by rearrangement
//!   merge, plus a brute-force allocation oracle.
//! - [`oracle`]: the same K-functional computed from its infimum-over-
//!   decompositions definition for weighted scalar couples; the independent
//!   witness the merge path is tested against.
//! - [`lorentz`]: Lorentz quasi-norms, their running-average variants, the
//!   real-interpolation norm of a profile and Hardy sandwich bounds.
//! - [`embed`]: product-space rearrangements and the power-dilation
//!   embeddings with their distribution identities.
//! - [`instance`]: serializable problem instances consumed by the CLI.
//! - [`verify`]: seeded verification suites with CSV reporting.
//!
//! Each capability has a runnable walkthrough under `examples/`; the
//! `kfunc-lab` binary exposes instance evaluation and the verification
//! suites on the command line.

pub mod alloc;
pub mod embed;
pub mod instance;
pub mod kfunc;
pub mod lorentz;
pub mod oracle;
mod quad;
pub mod stepfn;
pub mod verify;

pub use alloc::SimpleVectorFunction;
pub use kfunc::{KProfile, WeightedScalarCouple};
pub use stepfn::{StepFunction, ValueMassList};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{what} must be positive (got {value})")]
    NonPositive { what: &'static str, value: f64 },

    #[error("{what} must be finite (got {value})")]
    NonFinite { what: &'static str, value: f64 },

    #[error("{what} must be nonnegative (got {value})")]
    NegativeValue { what: &'static str, value: f64 },

    #[error("breakpoints must be finite, positive and strictly increasing")]
    InvalidBreakpoints,

    #[error("breakpoint/value length mismatch: {breakpoints} vs {values}")]
    LengthMismatch { breakpoints: usize, values: usize },

    #[error("{0} requires a step function with tail 0")]
    NonzeroTail(&'static str),

    #[error("{0} requires a nonincreasing step function")]
    NotMonotone(&'static str),

    #[error("norm diverges: {0}")]
    Divergent(&'static str),

    #[error("exhaustive oracle refused: {cells} cells exceeds the limit of {limit}")]
    OracleTooLarge { cells: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("instance: {0}")]
    Instance(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
