//! Monodromy-tuple enumeration of connected branched covers.

use crate::exact::{factorial, Rat};
use crate::mu::MuTuple;

use super::perm;
use super::{OracleError, OracleLimits};

/// Counts tuples `(sigma_0, tau_1, ..., tau_m, sigma_inf)` in `S_d` with
/// `sigma_0` of cycle type `(a, ..., a)`, each `tau_i` a transposition,
/// `sigma_inf` of cycle type `mu`, product the identity, and transitive
/// generated group; the result is that count divided by `d!`, which equals
/// the raw orbifold Hurwitz number `H_{g;mu}`.
///
/// The number of transpositions is forced to `m = 2g - 2 + n + d/a`; the
/// genus enters only through it.
pub fn count_connected_covers(
    a: u32,
    g: u32,
    mu: &MuTuple,
    limits: &OracleLimits,
) -> Result<Rat, OracleError> {
    if a < 1 || mu.is_empty() {
        return Err(OracleError::InvalidInput(
            "need a >= 1 and a nonempty profile".into(),
        ));
    }
    let d = mu.total();
    if d % a as u64 != 0 {
        return Err(OracleError::InvalidInput(format!(
            "a = {a} does not divide |mu| = {d}"
        )));
    }
    if d > limits.max_degree {
        return Err(OracleError::LimitExceeded(format!(
            "degree {d} > max_degree {}",
            limits.max_degree
        )));
    }
    let m_signed = 2 * g as i64 - 2 + mu.len() as i64 + (d / a as u64) as i64;
    let m = u64::try_from(m_signed).map_err(|_| {
        OracleError::InvalidInput(format!("negative branch point count m = {m_signed}"))
    })?;
    if m > limits.max_transpositions {
        return Err(OracleError::LimitExceeded(format!(
            "m = {m} > max_transpositions {}",
            limits.max_transpositions
        )));
    }

    let d = d as usize;
    let zero_type: Vec<u64> = vec![a as u64; d / a as usize];
    let sigma_infs = perm::with_cycle_type(d, &mu.sorted_desc());
    let taus = perm::transpositions(d);

    let mut count = 0u64;
    for sigma_inf in &sigma_infs {
        // Depth-first over tau choices, building the product tau_j ... tau_m
        // sigma_inf from the right; sigma_0 is then forced.
        let mut stack: Vec<Vec<u8>> = Vec::with_capacity(m as usize + 1);
        stack.push(sigma_inf.clone());
        count += dfs(&zero_type, &taus, &mut stack, m as usize, sigma_inf, d);
    }
    Ok(Rat::from(count) / factorial(d as u64))
}

fn dfs(
    zero_type: &[u64],
    taus: &[Vec<u8>],
    stack: &mut Vec<Vec<u8>>,
    remaining: usize,
    sigma_inf: &[u8],
    d: usize,
) -> u64 {
    if remaining == 0 {
        let product = stack.last().expect("stack seeded with sigma_inf");
        let sigma_0 = perm::inverse(product);
        if perm::cycle_type(&sigma_0) != zero_type {
            return 0;
        }
        // sigma_0 is the inverse of the product of the others, so
        // transitivity of the whole tuple reduces to these generators.
        let mut gens: Vec<&[u8]> = vec![sigma_inf, &sigma_0];
        for tau in &stack[1..] {
            gens.push(tau);
        }
        return u64::from(perm::is_transitive(&gens, d));
    }
    let mut total = 0;
    for tau in taus {
        let head = stack.last().expect("nonempty stack");
        let next = perm::compose(tau, head);
        stack.push(next);
        total += dfs(zero_type, taus, stack, remaining - 1, sigma_inf, d);
        stack.pop();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu(parts: &[u64]) -> MuTuple {
        MuTuple::from_slice(parts).unwrap()
    }

    #[test]
    fn appendix_fatgraph_value() {
        let v = count_connected_covers(2, 0, &mu(&[3, 1]), &OracleLimits::default()).unwrap();
        assert_eq!(v, Rat::from(3i64));
    }

    #[test]
    fn single_tuple_cover() {
        // sigma_0 = (01), no transpositions, sigma_inf = (01): weight 1/2!
        let v = count_connected_covers(2, 0, &mu(&[2]), &OracleLimits::default()).unwrap();
        assert_eq!(v, Rat::from_frac(1, 2));
    }

    #[test]
    fn matches_cut_and_join_in_genus_one() {
        let v = count_connected_covers(1, 1, &mu(&[2]), &OracleLimits::default()).unwrap();
        let h = crate::cutjoin::hurwitz_raw(1, 1, &mu(&[2])).unwrap();
        assert_eq!(v, h);
    }

    #[test]
    fn limits_are_enforced() {
        let tight = OracleLimits {
            max_degree: 3,
            max_transpositions: 1,
        };
        assert!(matches!(
            count_connected_covers(2, 0, &mu(&[3, 1]), &tight),
            Err(OracleError::LimitExceeded(_))
        ));
        assert!(matches!(
            count_connected_covers(2, 0, &mu(&[2, 1]), &OracleLimits::default()),
            Err(OracleError::InvalidInput(_))
        ));
    }
}
