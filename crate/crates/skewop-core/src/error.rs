//! Error type shared across the symbolic engine.

use thiserror::Error;

use crate::jack::DensityFamily;
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error("not a rational: {input:?} (expected an integer or p/q)")]
    BadRational { input: String },

    #[error("gamma ratio needs an integer argument difference, got {a} and {b}")]
    NonIntegerGammaDifference { a: Rat, b: Rat },

    #[error("gamma ratio pole: gamma({arg}) diverges with no matching numerator pole")]
    GammaPole { arg: Rat },

    #[error(
        "pochhammer factor for row {row} crosses a gamma pole: \
         base {base} is a nonpositive integer inside the rising product"
    )]
    PochhammerPole { row: usize, base: Rat },

    #[error("partition {kappa} has more parts than the {n_vars} available variables")]
    TooManyParts { kappa: String, n_vars: usize },

    #[error(
        "divergent {family:?} average: lambda1={lambda1}, lambda2={lambda2}, \
         kappa={kappa}, pole in row {row}"
    )]
    DivergentAverage {
        family: DensityFamily,
        lambda1: Rat,
        lambda2: Rat,
        kappa: String,
        row: usize,
    },

    #[error("principal value implemented for column shapes only, got {kappa}")]
    UnsupportedShape { kappa: String },

    #[error("evaluation points must be distinct")]
    RepeatedPoint,

    #[error("matrix half-size n must be at least 1")]
    ZeroSize,

    #[error("induced exponent must be nonnegative, got {alpha}")]
    NegativeInducedExponent { alpha: Rat },

    #[error("parameter pole: {detail}")]
    ParameterPole { detail: String },

    #[error("invalid parameter: {detail}")]
    InvalidParameter { detail: String },

    #[error(
        "odd-polynomial cancellation failed at degree {degree} with residual {residual}; \
         this indicates an internal inconsistency"
    )]
    CancellationFailure { degree: usize, residual: Rat },
}
