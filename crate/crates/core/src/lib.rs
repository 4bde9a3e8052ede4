//! Computation engine for orbifold Hurwitz numbers.
//!
//! The orbifold Hurwitz number `H^[a]_{g;mu}` is the weighted count of
//! connected genus-g branched covers of the sphere with ramification profile
//! `mu` over infinity, profile `(a, ..., a)` over 0, and simple branching at
//! `m = 2g - 2 + n + |mu|/a` further points.  This crate computes these
//! numbers three independent ways and cross-checks the results:
//!
//! * [`cutjoin`] — exact cut-and-join recursion over arbitrary-precision
//!   rationals, plus generating-series coefficients;
//! * [`oracle`] — brute-force enumeration of monodromy tuples, fatgraphs and
//!   cactus-node trees at small degree;
//! * [`eo`] — floating-point Eynard--Orantin topological recursion on the
//!   spectral curve `x = z exp(-z^a)`, `y = z^a`, compared pointwise against
//!   the exact side.
//!
//! The exact side is tied to the numeric side through [`xibasis`], which
//! expresses the generating functions in a finite basis of rational
//! functions, and [`quasipoly`], which extracts the quasi-polynomial
//! structure underlying the numbers and verifies the string and dilaton
//! equations.

pub mod cutjoin;
pub mod eo;
pub mod exact;
mod linalg;
pub mod mu;
pub mod oracle;
pub mod quasipoly;
pub mod xibasis;

pub use exact::{Poly, Rat, RatFunc, Series};
pub use mu::MuTuple;
