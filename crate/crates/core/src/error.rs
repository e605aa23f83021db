//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} out of supported range [2, 2^31 - 1]")]
    PrimeOutOfRange(u64),

    #[error("exponent overflow: {0}")]
    ExponentOverflow(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("division by zero in F_p")]
    DivisionByZero,

    #[error("colon denominator is the zero ideal")]
    ZeroColon,

    #[error("resource cap exceeded during {what} (cap {cap})")]
    ResourceExhausted { what: &'static str, cap: u64 },

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("polynomial is not univariate")]
    NotUnivariate,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("ideal is the unit ideal")]
    UnitIdeal,

    #[error("ring is not F-pure; operation requires F-purity")]
    NotFPure,

    #[error("minimal-prime decomposition capability failure at {stage}")]
    CapabilityFailure { stage: String },

    #[error("compatibility routes disagree for {ideal} at level {level}: colon={colon}, cartier={cartier}")]
    RouteDisagreement {
        ideal: String,
        level: u32,
        colon: bool,
        cartier: bool,
    },

    #[error("lattice invariant breached: {0}")]
    InvariantBreach(String),

    #[error("no test-element candidate found within the trial budget")]
    NoTestElement,

    #[error("iteration cap {0} exceeded before a fixed point was reached")]
    IterationCap(u32),

    #[error("truncation bound too small: need D >= {needed}")]
    TruncationOverflow { needed: u64 },
}
