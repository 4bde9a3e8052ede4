//! Residue pairings behind the string and dilaton equations.
//!
//! Summed over the branch points,
//!
//! ```text
//!   sum_alpha Res_{z=alpha} y(z)   xi_k^(r)(z) dx/x  =  1 at (k, r) = (1, a), else 0
//!   sum_alpha Res_{z=alpha} Phi(z) xi_k^(r)(z) dx/x  = -1 at (k, r) = (2, a), else 0
//! ```
//!
//! with `Phi = z^a/a - z^(2a)/2` an antiderivative of `y dx/x`.  The stated
//! unit normalizations belong to the `z^a`-seeded ladder for the zero
//! residue class, so the uniform-seed functions from [`crate::xibasis`] are
//! rescaled by `a` when `r = a`.

use num_complex::Complex64;

use crate::exact::Rat;
use crate::xibasis::{xi_ratfunc, PoleFactored};

use super::curve::SpectralCurve;
use super::{EOConfig, EoError};

/// Which multiplier pairs against the ladder function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueKind {
    /// `y(z) = z^a`
    StringY,
    /// `Phi(z) = z^a/a - z^(2a)/2`
    DilatonPhi,
}

/// Numeric value of the residue pairing for `xi_k^(r)`, `k >= 0`,
/// `1 <= r <= a`.
pub fn residue_identity(
    curve: &SpectralCurve,
    kind: ResidueKind,
    r: u32,
    k: u32,
    cfg: &EOConfig,
) -> Result<Complex64, EoError> {
    cfg.validate()?;
    let a = curve.a();
    if r < 1 || r > a {
        return Err(EoError::InvalidInput(format!(
            "need 1 <= r <= a, got r = {r}"
        )));
    }
    let mut xi = xi_ratfunc(a, r, k as i32).map_err(EoError::from)?;
    if r == a {
        xi = xi.scale(&Rat::from(a as u64));
    }
    let xi = PoleFactored::from_ratfunc(&xi, a).expect("ladder poles sit at the zeros of dx");

    let mut total = Complex64::new(0.0, 0.0);
    for &alpha in curve.branch_points() {
        let rho = cfg.radius_factor * curve.isolation_radius(alpha);
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..cfg.quad_points {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / cfg.quad_points as f64;
            let dir = Complex64::from_polar(1.0, theta);
            let z = alpha + rho * dir;
            let za = z.powu(a);
            let multiplier = match kind {
                ResidueKind::StringY => za,
                ResidueKind::DilatonPhi => za / a as f64 - 0.5 * za * za,
            };
            // dx/x = (1 - a z^a)/z dz
            let dlog = (Complex64::new(1.0, 0.0) - a as f64 * za) / z;
            let xi_val = xi.eval(z, 1e-250).map_err(EoError::from)?;
            sum += multiplier * xi_val * dlog * dir;
        }
        total += sum * rho / cfg.quad_points as f64;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_pairing_selects_level_one_zero_class() {
        let cfg = EOConfig::default();
        for a in 1..=3u32 {
            let curve = SpectralCurve::new(a);
            let unit =
                residue_identity(&curve, ResidueKind::StringY, a, 1, &cfg).unwrap();
            assert!((unit - Complex64::new(1.0, 0.0)).norm() < 1e-8, "a = {a}");
            for k in [0u32, 2, 3] {
                let v = residue_identity(&curve, ResidueKind::StringY, a, k, &cfg).unwrap();
                assert!(v.norm() < 1e-8, "a = {a}, k = {k}");
            }
            if a >= 2 {
                let v = residue_identity(&curve, ResidueKind::StringY, 1, 0, &cfg).unwrap();
                assert!(v.norm() < 1e-8, "a = {a}");
            }
        }
    }

    #[test]
    fn dilaton_pairing_selects_level_two_zero_class() {
        let cfg = EOConfig::default();
        for a in 1..=3u32 {
            let curve = SpectralCurve::new(a);
            let unit =
                residue_identity(&curve, ResidueKind::DilatonPhi, a, 2, &cfg).unwrap();
            assert!((unit + Complex64::new(1.0, 0.0)).norm() < 1e-8, "a = {a}");
            for k in [0u32, 1, 3] {
                let v =
                    residue_identity(&curve, ResidueKind::DilatonPhi, a, k, &cfg).unwrap();
                assert!(v.norm() < 1e-8, "a = {a}, k = {k}");
            }
        }
    }
}
