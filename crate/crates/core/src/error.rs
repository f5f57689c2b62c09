use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,

    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("operands expressed in different bases: {left} vs {right}")]
    BasisMismatch { left: &'static str, right: &'static str },

    #[error("structure table inconsistency at pair ({i}, {j}) in basis {basis}: {detail}")]
    TableInconsistency {
        basis: &'static str,
        i: usize,
        j: usize,
        detail: String,
    },

    #[error("form is not alternating on triple ({0}, {1}, {2})")]
    NonAlternating(usize, usize, usize),

    #[error("weights belong to different root systems")]
    SystemMismatch,

    #[error("weight is not dominant")]
    NonDominantWeight,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "failed to certify Verlinde sum as an integer: residual {residual:e} at {precision_bits} bits"
    )]
    Certification { residual: f64, precision_bits: usize },

    #[error("internal arithmetic inconsistency: {0}")]
    InternalArithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
