//! Orbifold Hurwitz numbers via the cut-and-join recursion.
//!
//! All values are for covers with profile `(a, ..., a)` over 0, profile `mu`
//! over infinity, and `m = 2g - 2 + n + |mu|/a` simple branch points.  The
//! normalized number is
//!
//! ```text
//!   H_g(mu) = H_{g;mu} * |Aut mu| / m!
//! ```
//!
//! which is exactly the coefficient of `x_1^{mu_1} ... x_n^{mu_n}` in the
//! generating function `H_{g,n}(x_1, ..., x_n)`.  The recursion, on `m`:
//!
//! ```text
//!   m H_g(mu_S) = sum_{i<j} (mu_i + mu_j) H_g(mu_{S\{i,j}}, mu_i + mu_j)
//!     + sum_i sum_{alpha+beta=mu_i} (alpha beta / 2) *
//!         [ H_{g-1}(mu_{S\{i}}, alpha, beta)
//!           + sum_{g1+g2=g, I disjoint-union J = S\{i}}
//!               H_{g1}(mu_I, alpha) H_{g2}(mu_J, beta) ]
//! ```
//!
//! where the inner sums run over ordered pairs `(alpha, beta)` and ordered
//! splits `(g1, I), (g2, J)`, with no stability restriction: unstable
//! factors `H_{0,1}` and `H_{0,2}` participate.  Each recursive call lowers
//! `m` by exactly one, bottoming out at `m = 0`, where the only cover with
//! no simple branch point is `z -> z^a` itself: `(g, n, mu) = (0, 1, (a))`
//! with weight `1/a` from its deck transformations.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::exact::{factorial, Rat};
use crate::mu::MuTuple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutJoinError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Memoization key: `(a, g)` plus the parts in non-increasing order, which
/// is canonical because the normalized numbers are symmetric in `mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HurwitzKey {
    pub a: u32,
    pub g: u32,
    pub mu_sorted: Vec<u64>,
}

/// Shared memo table for the recursion.
///
/// Lookups and insertions take the lock briefly; computation happens outside
/// it, so two threads may recompute the same key.  Both arrive at the same
/// exact value, making last-write-wins safe.
#[derive(Default)]
pub struct HurwitzCache {
    table: Mutex<HashMap<HurwitzKey, Rat>>,
}

impl HurwitzCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Normalized orbifold Hurwitz number `H_g(mu) = H_{g;mu} |Aut mu| / m!`.
    pub fn normalized(&self, a: u32, g: u32, mu: &MuTuple) -> Result<Rat, CutJoinError> {
        if a < 1 {
            return Err(CutJoinError::InvalidInput("a must be >= 1".into()));
        }
        if mu.is_empty() {
            return Err(CutJoinError::InvalidInput("mu must be nonempty".into()));
        }
        Ok(self.eval(a, g, mu.sorted_desc()))
    }

    /// Raw orbifold Hurwitz number `H_{g;mu}` (normalized times `m!/|Aut mu|`).
    pub fn raw(&self, a: u32, g: u32, mu: &MuTuple) -> Result<Rat, CutJoinError> {
        let normalized = self.normalized(a, g, mu)?;
        if normalized.is_zero() {
            return Ok(Rat::zero());
        }
        let m = branch_point_count(a, g, mu.len(), mu.total())
            .expect("nonzero value implies integral m >= 0");
        Ok(normalized * factorial(m) / mu.aut_order())
    }

    /// Generating-series coefficients: the value at every ordered tuple in
    /// `{1..mu_max}^n`.  Each coefficient is the normalized number itself.
    pub fn series_coefficients(
        &self,
        a: u32,
        g: u32,
        n: usize,
        mu_max: u64,
    ) -> Result<BTreeMap<MuTuple, Rat>, CutJoinError> {
        if n < 1 {
            return Err(CutJoinError::InvalidInput("n must be >= 1".into()));
        }
        if mu_max < 1 {
            return Err(CutJoinError::InvalidInput("mu_max must be >= 1".into()));
        }
        let mut out = BTreeMap::new();
        let mut tuple = vec![1u64; n];
        loop {
            let mu = MuTuple::new(tuple.clone()).expect("parts are positive");
            let value = self.normalized(a, g, &mu)?;
            out.insert(mu, value);
            // next tuple in odometer order
            let mut pos = n;
            while pos > 0 {
                if tuple[pos - 1] < mu_max {
                    tuple[pos - 1] += 1;
                    for t in &mut tuple[pos..] {
                        *t = 1;
                    }
                    break;
                }
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
        Ok(out)
    }

    fn eval(&self, a: u32, g: u32, mu_sorted: Vec<u64>) -> Rat {
        let n = mu_sorted.len();
        let d: u64 = mu_sorted.iter().sum();
        if d % a as u64 != 0 {
            return Rat::zero();
        }
        let m = match branch_point_count(a, g, n, d) {
            Some(m) => m,
            None => return Rat::zero(),
        };
        if m == 0 {
            return if g == 0 && n == 1 && mu_sorted[0] == a as u64 {
                Rat::from_frac(1, a as i64)
            } else {
                Rat::zero()
            };
        }

        let key = HurwitzKey {
            a,
            g,
            mu_sorted: mu_sorted.clone(),
        };
        if let Some(v) = self.table.lock().unwrap().get(&key) {
            return v.clone();
        }

        let mut total = Rat::zero();

        // Join terms: faces i and j merge into one of perimeter mu_i + mu_j.
        for i in 0..n {
            for j in (i + 1)..n {
                let mut sub: Vec<u64> = Vec::with_capacity(n - 1);
                for (t, &p) in mu_sorted.iter().enumerate() {
                    if t != i && t != j {
                        sub.push(p);
                    }
                }
                sub.push(mu_sorted[i] + mu_sorted[j]);
                sub.sort_unstable_by(|x, y| y.cmp(x));
                let factor = Rat::from(mu_sorted[i] + mu_sorted[j]);
                total += factor * self.eval(a, g, sub);
            }
        }

        // Cut terms: face i splits as alpha + beta, either lowering the
        // genus or disconnecting into an ordered pair of covers.
        for i in 0..n {
            let rest: Vec<u64> = mu_sorted
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != i)
                .map(|(_, &p)| p)
                .collect();
            for alpha in 1..mu_sorted[i] {
                let beta = mu_sorted[i] - alpha;
                let weight = Rat::from(alpha) * Rat::from(beta) / Rat::from(2i64);

                let mut bracket = Rat::zero();
                if g >= 1 {
                    let mut sub = rest.clone();
                    sub.push(alpha);
                    sub.push(beta);
                    sub.sort_unstable_by(|x, y| y.cmp(x));
                    bracket += self.eval(a, g - 1, sub);
                }

                for g1 in 0..=g {
                    let g2 = g - g1;
                    for mask in 0u32..(1 << rest.len()) {
                        let mut left = Vec::with_capacity(rest.len() + 1);
                        let mut right = Vec::with_capacity(rest.len() + 1);
                        for (t, &p) in rest.iter().enumerate() {
                            if mask & (1 << t) != 0 {
                                left.push(p);
                            } else {
                                right.push(p);
                            }
                        }
                        left.push(alpha);
                        right.push(beta);
                        left.sort_unstable_by(|x, y| y.cmp(x));
                        right.sort_unstable_by(|x, y| y.cmp(x));
                        let h1 = self.eval(a, g1, left);
                        if h1.is_zero() {
                            continue;
                        }
                        let h2 = self.eval(a, g2, right);
                        bracket += h1 * h2;
                    }
                }

                total += weight * bracket;
            }
        }

        let value = total / Rat::from(m);
        self.table.lock().unwrap().insert(key, value.clone());
        value
    }
}

/// `m = 2g - 2 + n + |mu|/a`, or `None` when negative or non-integral.
pub fn branch_point_count(a: u32, g: u32, n: usize, total: u64) -> Option<u64> {
    if total % a as u64 != 0 {
        return None;
    }
    let m = 2 * g as i64 - 2 + n as i64 + (total / a as u64) as i64;
    u64::try_from(m).ok()
}

fn global_cache() -> &'static HurwitzCache {
    static CACHE: OnceLock<HurwitzCache> = OnceLock::new();
    CACHE.get_or_init(HurwitzCache::new)
}

/// [`HurwitzCache::normalized`] against a process-wide shared cache.
pub fn hurwitz_normalized(a: u32, g: u32, mu: &MuTuple) -> Result<Rat, CutJoinError> {
    global_cache().normalized(a, g, mu)
}

/// [`HurwitzCache::raw`] against a process-wide shared cache.
pub fn hurwitz_raw(a: u32, g: u32, mu: &MuTuple) -> Result<Rat, CutJoinError> {
    global_cache().raw(a, g, mu)
}

/// [`HurwitzCache::series_coefficients`] against a process-wide shared cache.
pub fn series_coefficients(
    a: u32,
    g: u32,
    n: usize,
    mu_max: u64,
) -> Result<BTreeMap<MuTuple, Rat>, CutJoinError> {
    global_cache().series_coefficients(a, g, n, mu_max)
}
