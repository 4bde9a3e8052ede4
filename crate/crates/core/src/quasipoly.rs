//! Quasi-polynomial structure of the normalized Hurwitz numbers.
//!
//! Stripping the combinatorial prefactor from a normalized number leaves a
//! polynomial per residue class:
//!
//! ```text
//!   H_g(mu) = a^(1 - g + sum {mu_i/a}) * Q_{g,n}(mu) * prod_i C(mu_i),
//!   C(mu) = mu^floor(mu/a) / floor(mu/a)!,
//! ```
//!
//! where `Q_{g,n}` restricted to each class `mu_i = r_i (mod a)` is a
//! polynomial of total degree at most `3g - 3 + n`.  [`extract_quasipoly`]
//! recovers these polynomials by exact tensor interpolation and validates
//! them on extrapolation points.  The string and dilaton identities relate
//! consecutive families:
//!
//! ```text
//!   Q_{g,n+1}(mu, 0)                    = (mu_1 + ... + mu_n) Q_{g,n}(mu)
//!   d/d(mu_{n+1}) Q_{g,n+1}(mu, 0)      = (2g - 2 + n)       Q_{g,n}(mu)
//! ```
//!
//! evaluated in the zero residue class of the extra variable.  The dilaton
//! factor `2g - 2 + n` is forced by the residue value -1 of the dilaton
//! pairing (see `eo::residue_identity`) together with the genus-0 closed
//! formula `(1/a)(mu_1 + ... + mu_n)^(n-3)`, both of which this crate
//! verifies independently.

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cutjoin::{hurwitz_normalized, CutJoinError};
use crate::exact::{factorial, Rat};
use crate::linalg::{apply_axis, decode_index, invert_matrix};
use crate::mu::MuTuple;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuasiPolyError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An interpolated polynomial failed to reproduce a held-out value;
    /// the degree bound or the interpolation itself is wrong.
    #[error("interpolation unstable at class {class:?}, mu = {mu:?}")]
    InterpolationUnstable { class: Vec<u32>, mu: Vec<u64> },
}

impl From<CutJoinError> for QuasiPolyError {
    fn from(e: CutJoinError) -> Self {
        QuasiPolyError::InvalidInput(e.to_string())
    }
}

/// Multivariate polynomial over the exact rationals, keyed by exponent
/// vectors of a fixed arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MPoly {
    pub fn zero(arity: usize) -> Self {
        MPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rat) -> Self {
        let mut p = MPoly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    /// The `i`-th variable.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        let mut exps = vec![0; arity];
        exps[i] = 1;
        let mut p = MPoly::zero(arity);
        p.terms.insert(exps, Rat::one());
        p
    }

    /// `mu_1 + ... + mu_n`.
    pub fn sum_of_vars(arity: usize) -> Self {
        let mut p = MPoly::zero(arity);
        for i in 0..arity {
            let mut exps = vec![0; arity];
            exps[i] = 1;
            p.terms.insert(exps, Rat::one());
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    fn insert_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        self.add(&rhs.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.arity);
        }
        MPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.arity, rhs.arity);
        let mut out = MPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(exps, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> MPoly {
        let mut acc = MPoly::constant(self.arity, Rat::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.arity);
        let mut total = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term *= x.pow(e as i64);
                }
            }
            total += term;
        }
        total
    }

    /// Partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> MPoly {
        assert!(i < self.arity);
        let mut out = MPoly::zero(self.arity);
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            out.insert_term(e, c * &Rat::from(exps[i] as u64));
        }
        out
    }

    /// Sets the last variable to zero, dropping the arity by one.
    pub fn eval_last_at_zero(&self) -> MPoly {
        assert!(self.arity >= 1);
        let mut out = MPoly::zero(self.arity - 1);
        for (exps, c) in &self.terms {
            if exps[self.arity - 1] != 0 {
                continue;
            }
            out.insert_term(exps[..self.arity - 1].to_vec(), c.clone());
        }
        out
    }
}

/// The per-class polynomials of one `(a, g, n)` family.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiPolyFamily {
    pub a: u32,
    pub g: u32,
    pub n: usize,
    pub degree_bound: u32,
    classes: BTreeMap<Vec<u32>, MPoly>,
}

impl QuasiPolyFamily {
    /// The polynomial for the residue class `r` (each `r_i` in `[1, a]`,
    /// the zero class represented by `a`).
    pub fn class(&self, r: &[u32]) -> &MPoly {
        &self.classes[r]
    }

    pub fn classes(&self) -> impl Iterator<Item = (&Vec<u32>, &MPoly)> {
        self.classes.iter()
    }

    /// `C(mu) = mu^floor(mu/a) / floor(mu/a)!`.
    pub fn combinatorial_factor(a: u32, mu: u64) -> Rat {
        let b = mu / a as u64;
        Rat::from(mu).pow(b as i64) / factorial(b)
    }

    /// `a^(1 - g + sum {mu_i/a}) * Q(mu) * prod C(mu_i)`: the normalized
    /// Hurwitz number the family encodes at `mu`.
    pub fn value(&self, mu: &[u64]) -> Rat {
        assert_eq!(mu.len(), self.n);
        let a = self.a as u64;
        let class: Vec<u32> = mu.iter().map(|&m| ((m - 1) % a + 1) as u32).collect();
        let point: Vec<Rat> = mu.iter().map(|&m| Rat::from(m)).collect();
        let frac_sum: u64 = mu.iter().map(|&m| m % a).sum();
        if frac_sum % a != 0 {
            // indivisible class: the polynomial is identically zero
            return Rat::zero();
        }
        let q = self.class(&class).eval(&point);
        let power = Rat::from(a).pow(1 - self.g as i64 + (frac_sum / a) as i64);
        let mut c_prod = Rat::one();
        for &m in mu {
            c_prod *= Self::combinatorial_factor(self.a, m);
        }
        power * q * c_prod
    }
}

impl Serialize for QuasiPolyFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Monomial<'a> {
            exps: &'a [u32],
            coeff: String,
        }
        #[derive(Serialize)]
        struct Class<'a> {
            r: &'a [u32],
            monomials: Vec<Monomial<'a>>,
        }
        let classes: Vec<Class> = self
            .classes
            .iter()
            .map(|(r, poly)| Class {
                r,
                monomials: poly
                    .terms()
                    .map(|(exps, c)| Monomial {
                        exps,
                        coeff: c.to_string(),
                    })
                    .collect(),
            })
            .collect();
        let mut s = serializer.serialize_struct("QuasiPolyFamily", 6)?;
        s.serialize_field("schema_version", &1u32)?;
        s.serialize_field("a", &self.a)?;
        s.serialize_field("g", &self.g)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("degree_bound", &self.degree_bound)?;
        s.serialize_field("classes", &classes)?;
        s.end()
    }
}

/// Extracts every class polynomial of the `(a, g, n)` family by tensor
/// Lagrange interpolation on the grid `mu_i = r_i + a b_i`,
/// `b_i in {0..3g-3+n}`, validating on extrapolation points one layer out.
pub fn extract_quasipoly(a: u32, g: u32, n: usize) -> Result<QuasiPolyFamily, QuasiPolyError> {
    if a < 1 || n < 1 {
        return Err(QuasiPolyError::InvalidInput(
            "need a >= 1 and n >= 1".into(),
        ));
    }
    if 2 * g as i64 - 2 + (n as i64) <= 0 {
        return Err(QuasiPolyError::InvalidInput(format!(
            "extraction needs 2g - 2 + n > 0, got (g, n) = ({g}, {n})"
        )));
    }
    let degree_bound = (3 * g as i64 - 3 + n as i64) as u32;
    let size = degree_bound as usize + 1;

    // Inverse Vandermonde per residue, nodes r, r + a, r + 2a, ...
    let mut inverses: Vec<Option<Vec<Vec<Rat>>>> = vec![None; a as usize + 1];
    for r in 1..=a {
        let v: Vec<Vec<Rat>> = (0..size)
            .map(|b| {
                let node = Rat::from(a as u64 * b as u64 + r as u64);
                (0..size).map(|p| node.pow(p as i64)).collect()
            })
            .collect();
        inverses[r as usize] = Some(invert_matrix(&v));
    }

    let mut classes = BTreeMap::new();
    let mut class = vec![1u32; n];
    loop {
        let poly = if class.iter().sum::<u32>() % a == 0 {
            extract_class(a, g, degree_bound, &class, &inverses)?
        } else {
            MPoly::zero(n)
        };
        classes.insert(class.clone(), poly);
        let mut pos = n;
        while pos > 0 {
            if class[pos - 1] < a {
                class[pos - 1] += 1;
                for c in &mut class[pos..] {
                    *c = 1;
                }
                break;
            }
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }

    Ok(QuasiPolyFamily {
        a,
        g,
        n,
        degree_bound,
        classes,
    })
}

fn quasi_value(a: u32, g: u32, class: &[u32], mu: &[u64]) -> Result<Rat, QuasiPolyError> {
    let tuple = MuTuple::new(mu.to_vec()).expect("parts are positive");
    let h = hurwitz_normalized(a, g, &tuple)?;
    let frac_sum: u32 = class.iter().filter(|&&r| r < a).sum();
    debug_assert_eq!(frac_sum % a, 0);
    let power = Rat::from(a as u64).pow(1 - g as i64 + (frac_sum / a) as i64);
    let mut c_prod = Rat::one();
    for &m in mu {
        c_prod *= QuasiPolyFamily::combinatorial_factor(a, m);
    }
    Ok(h / (power * c_prod))
}

fn extract_class(
    a: u32,
    g: u32,
    degree_bound: u32,
    class: &[u32],
    inverses: &[Option<Vec<Vec<Rat>>>],
) -> Result<MPoly, QuasiPolyError> {
    let n = class.len();
    let size = degree_bound as usize + 1;
    let total = size.pow(n as u32);

    let mu_at = |bs: &[usize]| -> Vec<u64> {
        bs.iter()
            .zip(class)
            .map(|(&b, &r)| a as u64 * b as u64 + r as u64)
            .collect()
    };

    let mut tensor: Vec<Rat> = Vec::with_capacity(total);
    let mut bs = vec![0usize; n];
    for idx in 0..total {
        decode_index(idx, size, &mut bs);
        tensor.push(quasi_value(a, g, class, &mu_at(&bs))?);
    }

    // Nodal values -> monomial coefficients, one axis at a time.
    for axis in 0..n {
        let vinv = inverses[class[axis] as usize]
            .as_ref()
            .expect("inverse built for every residue");
        apply_axis(&mut tensor, n, size, axis, vinv);
    }

    let mut poly = MPoly::zero(n);
    let mut exps = vec![0usize; n];
    for idx in 0..total {
        decode_index(idx, size, &mut exps);
        if !tensor[idx].is_zero() {
            poly.insert_term(exps.iter().map(|&e| e as u32).collect(), tensor[idx].clone());
        }
    }

    // Extrapolation check one layer beyond the grid: the corner with every
    // b_i = degree_bound + 1 and the single-axis spikes.
    let corner = vec![size; n];
    let mut validation = vec![corner];
    for i in 0..n {
        let mut spike = vec![0usize; n];
        spike[i] = size;
        validation.push(spike);
    }
    for bs in validation {
        let mu = mu_at(&bs);
        let truth = quasi_value(a, g, class, &mu)?;
        let point: Vec<Rat> = mu.iter().map(|&m| Rat::from(m)).collect();
        if poly.eval(&point) != truth {
            return Err(QuasiPolyError::InterpolationUnstable {
                class: class.to_vec(),
                mu,
            });
        }
    }

    Ok(poly)
}

/// Per-class outcome of a string or dilaton identity check.
#[derive(Clone, Debug, Serialize)]
pub struct ClassCheck {
    pub r: Vec<u32>,
    pub pass: bool,
}

/// Result of verifying one exact polynomial identity across all classes.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub schema_version: u32,
    pub identity: String,
    pub a: u32,
    pub g: u32,
    pub n: usize,
    pub classes: Vec<ClassCheck>,
    pub pass: bool,
}

fn check_identity(
    a: u32,
    g: u32,
    n: usize,
    identity: &str,
) -> Result<IdentityReport, QuasiPolyError> {
    let source = extract_quasipoly(a, g, n + 1)?;
    let target = extract_quasipoly(a, g, n)?;
    let mut classes = Vec::new();
    let mut pass = true;
    for (r, q_target) in target.classes() {
        let mut r_ext = r.clone();
        r_ext.push(a);
        let q_source = source.class(&r_ext);
        let (lhs, rhs) = match identity {
            "string" => (
                q_source.eval_last_at_zero(),
                MPoly::sum_of_vars(n).mul(q_target),
            ),
            "dilaton" => (
                q_source.partial(n).eval_last_at_zero(),
                q_target.scale(&Rat::from(2 * g as i64 - 2 + n as i64)),
            ),
            _ => unreachable!("identity is string or dilaton"),
        };
        let ok = lhs == rhs;
        pass &= ok;
        classes.push(ClassCheck {
            r: r.clone(),
            pass: ok,
        });
    }
    Ok(IdentityReport {
        schema_version: 1,
        identity: identity.to_string(),
        a,
        g,
        n,
        classes,
        pass,
    })
}

/// Verifies `Q_{g,n+1}(mu, 0) = (mu_1 + ... + mu_n) Q_{g,n}(mu)` as an exact
/// polynomial identity, class by class.
pub fn check_string(a: u32, g: u32, n: usize) -> Result<IdentityReport, QuasiPolyError> {
    check_identity(a, g, n, "string")
}

/// Verifies `d/d(mu_{n+1}) Q_{g,n+1}(mu, 0) = (2g - 2 + n) Q_{g,n}(mu)` as
/// an exact polynomial identity, class by class.
pub fn check_dilaton(a: u32, g: u32, n: usize) -> Result<IdentityReport, QuasiPolyError> {
    check_identity(a, g, n, "dilaton")
}

/// The genus-0 closed form `(1/a)(mu_1 + ... + mu_n)^(n-3)` for the class
/// with every part divisible by `a`.
pub fn genus0_closed(a: u32, n: usize) -> MPoly {
    assert!(n >= 3, "closed form needs n >= 3");
    MPoly::sum_of_vars(n)
        .pow(n as u32 - 3)
        .scale(&Rat::from_frac(1, a as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mpoly_basics() {
        let p = MPoly::sum_of_vars(2).pow(2);
        // (x + y)^2 = x^2 + 2xy + y^2
        assert_eq!(p.coefficient(&[2, 0]), Rat::one());
        assert_eq!(p.coefficient(&[1, 1]), Rat::from(2i64));
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(
            p.eval(&[Rat::from(3i64), Rat::from(4i64)]),
            Rat::from(49i64)
        );
        let dp = p.partial(0);
        assert_eq!(dp.coefficient(&[1, 0]), Rat::from(2i64));
        assert_eq!(dp.coefficient(&[0, 1]), Rat::from(2i64));
        let at0 = p.eval_last_at_zero();
        assert_eq!(at0.arity(), 1);
        assert_eq!(at0.coefficient(&[2]), Rat::one());
    }

    #[test]
    fn three_holed_sphere_is_constant() {
        for a in 1..=3u32 {
            let fam = extract_quasipoly(a, 0, 3).unwrap();
            let q = fam.class(&[a, a, a]);
            assert_eq!(
                q,
                &MPoly::constant(3, Rat::from_frac(1, a as i64)),
                "a = {a}"
            );
        }
    }

    #[test]
    fn four_holed_sphere_is_linear_sum() {
        for a in 1..=2u32 {
            let fam = extract_quasipoly(a, 0, 4).unwrap();
            let q = fam.class(&[a, a, a, a]);
            let expect = MPoly::sum_of_vars(4).scale(&Rat::from_frac(1, a as i64));
            assert_eq!(q, &expect, "a = {a}");
        }
    }

    #[test]
    fn definition_round_trip_on_and_off_grid() {
        let fam = extract_quasipoly(2, 1, 1).unwrap();
        for mu in [2u64, 4, 6, 8] {
            let truth =
                hurwitz_normalized(2, 1, &MuTuple::new(vec![mu]).unwrap()).unwrap();
            assert_eq!(fam.value(&[mu]), truth, "mu = {mu}");
        }
        for mu in [1u64, 3, 5, 7, 9] {
            let truth =
                hurwitz_normalized(2, 1, &MuTuple::new(vec![mu]).unwrap()).unwrap();
            assert_eq!(fam.value(&[mu]), truth, "mu = {mu}");
        }
    }

    #[test]
    fn degree_is_exactly_n_minus_3_for_genus_zero() {
        let fam = extract_quasipoly(2, 0, 4).unwrap();
        assert_eq!(fam.class(&[2, 2, 2, 2]).total_degree(), Some(1));
        assert_eq!(fam.degree_bound, 1);
    }

    #[test]
    fn string_identity_small_cases() {
        assert!(check_string(2, 0, 3).unwrap().pass);
        assert!(check_string(1, 1, 1).unwrap().pass);
    }

    #[test]
    fn dilaton_identity_small_cases() {
        assert!(check_dilaton(2, 0, 3).unwrap().pass);
        assert!(check_dilaton(1, 1, 1).unwrap().pass);
    }

    #[test]
    fn closed_form_small_cases() {
        assert_eq!(
            genus0_closed(2, 3),
            MPoly::constant(3, Rat::from_frac(1, 2))
        );
        assert_eq!(genus0_closed(1, 4), MPoly::sum_of_vars(4));
        let q5 = genus0_closed(3, 5);
        assert_eq!(q5.total_degree(), Some(2));
        assert_eq!(q5.coefficient(&[1, 1, 0, 0, 0]), Rat::from_frac(2, 3));
    }

    #[test]
    fn unstable_targets_rejected() {
        assert!(extract_quasipoly(2, 0, 2).is_err());
        assert!(extract_quasipoly(2, 0, 1).is_err());
    }

    #[test]
    fn json_shape_is_stable() {
        let fam = extract_quasipoly(1, 0, 3).unwrap();
        let json = serde_json::to_value(&fam).unwrap();
        assert_eq!(json["schema_version"], 1);
        assert_eq!(json["degree_bound"], 0);
        assert_eq!(json["classes"][0]["r"], serde_json::json!([1, 1, 1]));
        assert_eq!(json["classes"][0]["monomials"][0]["coeff"], "1");
    }
}
