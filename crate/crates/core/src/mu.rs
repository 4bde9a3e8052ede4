//! Ramification profiles.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::Rat;

/// Ordered tuple of positive ramification parts `(mu_1, ..., mu_n)`.
///
/// The tuple is ordered as given; symmetric quantities (`|mu|`, `Aut mu`)
/// ignore the order, and consumers that memoize sort a copy.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuTuple {
    parts: Vec<u64>,
}

impl MuTuple {
    /// Builds a tuple, rejecting zero parts.  The empty tuple is allowed
    /// structurally; operations that need `n >= 1` check for themselves.
    pub fn new(parts: Vec<u64>) -> Result<Self, String> {
        if parts.iter().any(|&p| p == 0) {
            return Err("ramification parts must be positive".into());
        }
        Ok(MuTuple { parts })
    }

    pub fn from_slice(parts: &[u64]) -> Result<Self, String> {
        MuTuple::new(parts.to_vec())
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|mu| = mu_1 + ... + mu_n`.
    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Parts in non-increasing order (the canonical partition form).
    pub fn sorted_desc(&self) -> Vec<u64> {
        let mut v = self.parts.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// `|Aut mu|`: the order of the group of permutations fixing the tuple,
    /// i.e. the product of factorials of part multiplicities.
    pub fn aut_order(&self) -> Rat {
        let sorted = self.sorted_desc();
        let mut acc = BigInt::one();
        let mut run = 0u64;
        let mut prev = None;
        for &p in &sorted {
            if Some(p) == prev {
                run += 1;
            } else {
                run = 1;
                prev = Some(p);
            }
            acc *= BigInt::from(run);
        }
        Rat::from(acc)
    }
}

impl fmt::Display for MuTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_parts() {
        assert!(MuTuple::new(vec![3, 0, 1]).is_err());
        assert!(MuTuple::new(vec![]).is_ok());
    }

    #[test]
    fn aut_order_counts_multiplicities() {
        let mu = MuTuple::new(vec![2, 1, 2, 2, 1]).unwrap();
        // multiplicities: 2 appears 3 times, 1 appears twice -> 3! * 2! = 12
        assert_eq!(mu.aut_order(), Rat::from(12i64));
        assert_eq!(MuTuple::new(vec![3, 1]).unwrap().aut_order(), Rat::one());
    }

    #[test]
    fn totals_and_sorting() {
        let mu = MuTuple::new(vec![1, 3, 2]).unwrap();
        assert_eq!(mu.total(), 6);
        assert_eq!(mu.sorted_desc(), vec![3, 2, 1]);
    }
}
