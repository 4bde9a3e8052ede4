//! The residue recursion for the multidifferential scalars.
//!
//! With `W_{g,n}` denoting the scalar of `w_{g,n}` against `dz_1 ... dz_n`,
//! the base cases are
//!
//! ```text
//!   W_{0,1}(z)      = -y dx / (x dz) = -z^(a-1) (1 - a z^a)
//!   W_{0,2}(z1, z2) = 1 / (z1 - z2)^2
//! ```
//!
//! and for `2g - 2 + n > 0`
//!
//! ```text
//!   W_{g,n}(z1, rest) = sum_alpha Res_{z=alpha} k(z1, z) B(z)
//! ```
//!
//! where the bracket `B` collects `W_{g-1,n+1}(z, zhat, rest)` and all
//! ordered splittings `W_{g1}(z, I) W_{g2}(zhat, J)` that avoid the `(0,1)`
//! factor, each term carrying one chain factor `dzhat/dz` for its one slot
//! evaluated at `zhat`.  Residues are trapezoid sums on circles whose radius
//! is a configured fraction of the distance to the nearest singularity, so
//! each nested level keeps the same geometric convergence rate.

use num_complex::Complex64;

use super::curve::{curve_xy, SpectralCurve};
use super::{EOConfig, EoError};

/// Evaluates the scalar `W_{g,n}` at the given points.
///
/// Stable `(g, n)` run the residue recursion; `(0, 1)` and `(0, 2)` return
/// their closed forms.  Points must be pairwise separated and away from the
/// branch points by `min_separation` times the curve scale.
pub fn omega_eval(
    curve: &SpectralCurve,
    g: u32,
    n: usize,
    zs: &[Complex64],
    cfg: &EOConfig,
) -> Result<Complex64, EoError> {
    cfg.validate()?;
    if n == 0 || zs.len() != n {
        return Err(EoError::InvalidInput(format!(
            "expected n = {n} >= 1 evaluation points, got {}",
            zs.len()
        )));
    }
    if zs.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(EoError::InvalidInput("non-finite evaluation point".into()));
    }
    let gap = cfg.min_separation * curve.scale();
    for (i, zi) in zs.iter().enumerate() {
        for zj in &zs[i + 1..] {
            if (zi - zj).norm() < gap {
                return Err(EoError::PointsTooClose);
            }
        }
    }
    let stable = 2 * g as i64 - 2 + n as i64 > 0;
    if stable {
        for z in zs {
            for alpha in curve.branch_points() {
                if (z - alpha).norm() < gap {
                    return Err(EoError::PointsTooClose);
                }
            }
        }
        return eval_stable(curve, g, zs, cfg);
    }
    match (g, n) {
        (0, 1) => Ok(w01(curve, zs[0])),
        (0, 2) => Ok(w02(zs[0], zs[1])),
        _ => unreachable!("n >= 1 and unstable leaves only (0,1) and (0,2)"),
    }
}

fn w01(curve: &SpectralCurve, z: Complex64) -> Complex64 {
    let a = curve.a();
    let za = z.powu(a);
    -z.powu(a - 1) * (Complex64::new(1.0, 0.0) - a as f64 * za)
}

fn w02(z1: Complex64, z2: Complex64) -> Complex64 {
    let d = z1 - z2;
    1.0 / (d * d)
}

/// Scalar dispatch inside the recursion; interior points may legitimately
/// sit close to branch points, so no separation checks here.
fn eval_any(
    curve: &SpectralCurve,
    g: u32,
    pts: &[Complex64],
    cfg: &EOConfig,
) -> Result<Complex64, EoError> {
    match (g, pts.len()) {
        (0, 1) => Ok(w01(curve, pts[0])),
        (0, 2) => Ok(w02(pts[0], pts[1])),
        _ => eval_stable(curve, g, pts, cfg),
    }
}

fn eval_stable(
    curve: &SpectralCurve,
    g: u32,
    pts: &[Complex64],
    cfg: &EOConfig,
) -> Result<Complex64, EoError> {
    debug_assert!(2 * g as i64 - 2 + pts.len() as i64 > 0);
    let z1 = pts[0];
    let rest = &pts[1..];
    let mut total = Complex64::new(0.0, 0.0);
    for &alpha in curve.branch_points() {
        total += residue_at(curve, g, z1, rest, alpha, pts, cfg)?;
    }
    Ok(total)
}

/// `Res_{z=alpha} k(z1, z) B(z)` by the trapezoid rule:
/// `(rho/N) sum_j f(alpha + rho e^(i theta_j)) e^(i theta_j)`.
fn residue_at(
    curve: &SpectralCurve,
    g: u32,
    z1: Complex64,
    rest: &[Complex64],
    alpha: Complex64,
    all_pts: &[Complex64],
    cfg: &EOConfig,
) -> Result<Complex64, EoError> {
    let mut clearance = curve.isolation_radius(alpha);
    for p in all_pts {
        clearance = clearance.min((alpha - p).norm());
    }
    let rho = cfg.radius_factor * clearance;
    if !(rho > 0.0) {
        return Err(EoError::PointsTooClose);
    }
    let n_quad = cfg.quad_points;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..n_quad {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / n_quad as f64;
        let dir = Complex64::from_polar(1.0, theta);
        let w = alpha + rho * dir;
        let (what, dwhat) = curve.involution(alpha, w, cfg)?;
        let kern = curve.kernel_given(z1, w, what)?;
        let bracket = bracket_scalar(curve, g, rest, w, what, dwhat, cfg)?;
        sum += kern * bracket * dir;
    }
    Ok(sum * rho / n_quad as f64)
}

fn bracket_scalar(
    curve: &SpectralCurve,
    g: u32,
    rest: &[Complex64],
    w: Complex64,
    what: Complex64,
    dwhat: Complex64,
    cfg: &EOConfig,
) -> Result<Complex64, EoError> {
    let mut acc = Complex64::new(0.0, 0.0);
    if g >= 1 {
        let mut pts = Vec::with_capacity(rest.len() + 2);
        pts.push(w);
        pts.push(what);
        pts.extend_from_slice(rest);
        acc += eval_any(curve, g - 1, &pts, cfg)?;
    }
    let subsets = 1u32 << rest.len();
    for g1 in 0..=g {
        let g2 = g - g1;
        for mask in 0..subsets {
            let i_size = mask.count_ones() as usize;
            let j_size = rest.len() - i_size;
            if (g1 == 0 && i_size == 0) || (g2 == 0 && j_size == 0) {
                continue;
            }
            let mut left = Vec::with_capacity(i_size + 1);
            let mut right = Vec::with_capacity(j_size + 1);
            left.push(w);
            right.push(what);
            for (t, &p) in rest.iter().enumerate() {
                if mask & (1 << t) != 0 {
                    left.push(p);
                } else {
                    right.push(p);
                }
            }
            let f1 = eval_any(curve, g1, &left, cfg)?;
            let f2 = eval_any(curve, g2, &right, cfg)?;
            acc += f1 * f2;
        }
    }
    Ok(acc * dwhat)
}

/// Circle integral `(1/2 pi i) closed-integral W_{g,n}(z1, rest) dz1` around
/// the `which`-th branch point; the recursion output has zero residues, so
/// this must vanish.
pub fn omega_first_variable_residue(
    curve: &SpectralCurve,
    g: u32,
    n: usize,
    which: usize,
    rest: &[Complex64],
    cfg: &EOConfig,
) -> Result<Complex64, EoError> {
    cfg.validate()?;
    if rest.len() + 1 != n {
        return Err(EoError::InvalidInput(
            "rest must hold the last n - 1 points".into(),
        ));
    }
    let alpha = curve.branch_points()[which];
    let mut clearance = curve.isolation_radius(alpha);
    for p in rest {
        clearance = clearance.min((alpha - p).norm());
    }
    let rho = cfg.radius_factor * clearance;
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..cfg.quad_points {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / cfg.quad_points as f64;
        let dir = Complex64::from_polar(1.0, theta);
        let mut pts = Vec::with_capacity(n);
        pts.push(alpha + rho * dir);
        pts.extend_from_slice(rest);
        sum += eval_any(curve, g, &pts, cfg)? * dir;
    }
    Ok(sum * rho / cfg.quad_points as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EOConfig {
        EOConfig::default()
    }

    #[test]
    fn base_cases() {
        let curve = SpectralCurve::new(2);
        let z1 = Complex64::new(0.3, 0.1);
        let z2 = Complex64::new(-0.2, 0.25);
        let w = omega_eval(&curve, 0, 2, &[z1, z2], &cfg()).unwrap();
        let d = z1 - z2;
        assert!((w - 1.0 / (d * d)).norm() < 1e-15);

        let w = omega_eval(&curve, 0, 1, &[z1], &cfg()).unwrap();
        let expect = -z1 * (Complex64::new(1.0, 0.0) - 2.0 * z1 * z1);
        assert!((w - expect).norm() < 1e-15);
    }

    #[test]
    fn separation_violations_rejected() {
        let curve = SpectralCurve::new(1);
        let z = Complex64::new(0.3, 0.0);
        assert!(matches!(
            omega_eval(&curve, 0, 2, &[z, z + Complex64::new(1e-9, 0.0)], &cfg()),
            Err(EoError::PointsTooClose)
        ));
        // stable evaluation too close to the branch point at 1
        assert!(matches!(
            omega_eval(
                &curve,
                1,
                1,
                &[Complex64::new(1.0 + 1e-9, 0.0)],
                &cfg()
            ),
            Err(EoError::PointsTooClose)
        ));
    }

    #[test]
    fn quadrature_insensitive_to_node_count() {
        let curve = SpectralCurve::new(2);
        let z = Complex64::new(0.31, 0.07);
        let coarse = omega_eval(&curve, 1, 1, &[z], &cfg()).unwrap();
        let mut fine_cfg = cfg();
        fine_cfg.quad_points = 128;
        let fine = omega_eval(&curve, 1, 1, &[z], &fine_cfg).unwrap();
        assert!((coarse - fine).norm() <= 1e-10 * fine.norm());
    }

    #[test]
    fn quadrature_insensitive_to_radius() {
        let curve = SpectralCurve::new(3);
        let z = Complex64::new(0.2, 0.12);
        let base = omega_eval(&curve, 1, 1, &[z], &cfg()).unwrap();
        let mut halved = cfg();
        halved.radius_factor = 0.125;
        let shrunk = omega_eval(&curve, 1, 1, &[z], &halved).unwrap();
        assert!((base - shrunk).norm() <= 1e-9 * base.norm());
    }

    #[test]
    fn first_variable_residues_vanish() {
        let curve = SpectralCurve::new(2);
        let rest = [Complex64::new(0.22, -0.05)];
        for which in 0..2 {
            let res =
                omega_first_variable_residue(&curve, 0, 2, which, &rest, &cfg()).unwrap();
            // even the double-pole base case has zero residue
            assert!(res.norm() < 1e-10);
        }
    }
}
