//! Independent brute-force computations of the same Hurwitz counts:
//! monodromy-tuple enumeration, fatgraph enumeration with automorphism
//! weights, and cactus-node tree counting.
//!
//! Everything here is exponential in the degree and exists to cross-check
//! the recursion at small size, so the entry points enforce explicit limits.

mod cactus;
mod covers;
mod fatgraph;
mod perm;

pub use cactus::{cactus_formula, count_cactus_trees_bruteforce};
pub use covers::count_connected_covers;
pub use fatgraph::count_fatgraphs;

use thiserror::Error;

/// Caps on the enumeration size.
#[derive(Clone, Debug)]
pub struct OracleLimits {
    /// Largest admissible cover degree `|mu|`.
    pub max_degree: u64,
    /// Largest admissible number of simple branch points `m`.
    pub max_transpositions: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_degree: 6,
            max_transpositions: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
