//! Exact arbitrary-precision arithmetic in one variable: rationals,
//! polynomials, rational functions and truncated power series.
//!
//! Everything here is immutable after construction and all operations are
//! pure, so values can be shared freely across threads.

mod poly;
mod rat;
mod ratfunc;
mod series;

pub use poly::Poly;
pub use rat::{factorial, Rat};
pub use ratfunc::RatFunc;
pub use series::Series;

use thiserror::Error;

/// Errors from exact arithmetic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    /// Taylor expansion at the origin requested for a function with a pole
    /// there (denominator vanishes at 0).
    #[error("pole at the origin")]
    PoleAtOrigin,
    /// Series composition requires the inner series to vanish at 0.
    #[error("inner series has nonzero constant term")]
    NonzeroConstantTerm,
    /// Floating-point evaluation too close to a pole of the function.
    #[error("evaluation point too close to a pole (|denominator| = {denominator_abs:e})")]
    NearPole { denominator_abs: f64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
