//! Curve data: branch points, the local involution, and the recursion
//! kernel.

use num_complex::Complex64;

use super::{EOConfig, EoError};

/// Evaluates `x = z exp(-z^a)`, `y = z^a`, and `dx/dz = (1 - a z^a) exp(-z^a)`.
pub fn curve_xy(a: u32, z: Complex64) -> (Complex64, Complex64, Complex64) {
    let y = z.powu(a);
    let damp = (-y).exp();
    let x = z * damp;
    let dx_dz = (Complex64::new(1.0, 0.0) - a as f64 * y) * damp;
    (x, y, dx_dz)
}

/// The curve together with its branch points: the `a` zeros of `dx`, i.e.
/// the roots of `1 - a z^a`, at modulus `a^(-1/a)`.
#[derive(Clone, Debug)]
pub struct SpectralCurve {
    a: u32,
    branch_points: Vec<Complex64>,
}

impl SpectralCurve {
    pub fn new(a: u32) -> Self {
        assert!(a >= 1, "a must be >= 1");
        let modulus = (a as f64).powf(-1.0 / a as f64);
        let mut branch_points = Vec::with_capacity(a as usize);
        for j in 0..a {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / a as f64;
            let mut z = Complex64::from_polar(modulus, angle);
            // Newton on 1 - a z^a to clear the libm roundoff.
            for _ in 0..3 {
                let f = Complex64::new(1.0, 0.0) - a as f64 * z.powu(a);
                let df = -(a as f64) * (a as f64) * z.powu(a - 1);
                z -= f / df;
            }
            let residual = (Complex64::new(1.0, 0.0) - a as f64 * z.powu(a)).norm();
            assert!(residual <= 1e-12, "branch point refinement failed");
            branch_points.push(z);
        }
        debug_assert!(pairwise_distinct(&branch_points));
        SpectralCurve { a, branch_points }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn branch_points(&self) -> &[Complex64] {
        &self.branch_points
    }

    /// Natural length scale `a^(-1/a)` (the branch-point modulus).
    pub fn scale(&self) -> f64 {
        self.branch_points[0].norm()
    }

    /// Distance from `alpha` to the nearest other singularity of the
    /// involution: the other branch points and the origin.
    pub(super) fn isolation_radius(&self, alpha: Complex64) -> f64 {
        let mut min = alpha.norm();
        for &other in &self.branch_points {
            let d = (alpha - other).norm();
            if d > 1e-9 * self.scale() && d < min {
                min = d;
            }
        }
        min
    }

    /// The unique nearby point `zhat != z` with `x(zhat) = x(z)`, plus the
    /// derivative `dzhat/dz = x'(z)/x'(zhat)`.
    ///
    /// Newton iteration seeded at the reflection `2 alpha - z`; the seed is
    /// accurate to second order in `z - alpha` because the critical point is
    /// simple.
    pub fn involution(
        &self,
        alpha: Complex64,
        z: Complex64,
        cfg: &EOConfig,
    ) -> Result<(Complex64, Complex64), EoError> {
        let dist = (z - alpha).norm();
        let validity = 0.5 * self.isolation_radius(alpha);
        if !(dist > 0.0 && dist < validity) {
            return Err(EoError::InvalidInput(format!(
                "involution point at distance {dist:e} outside validity radius {validity:e}"
            )));
        }
        let (x_target, _, _) = curve_xy(self.a, z);
        let tol = cfg.newton_tol * x_target.norm() + 1e-300;
        // Iterate past the configured tolerance down to the roundoff floor:
        // the residual error is amplified by 1/|x'| ~ 1/|z - alpha| when it
        // propagates into zhat, and nested residue levels compound it.
        let floor = 4.0 * f64::EPSILON * x_target.norm();

        let mut w = 2.0 * alpha - z;
        let mut best = w;
        let mut best_residual = f64::INFINITY;
        let mut stalled = 0;
        for _ in 0..cfg.newton_max_iter {
            let (xw, _, dxw) = curve_xy(self.a, w);
            let residual = xw - x_target;
            if residual.norm() < best_residual {
                best = w;
                best_residual = residual.norm();
                stalled = 0;
            } else {
                stalled += 1;
                if stalled >= 2 {
                    break;
                }
            }
            if best_residual <= floor {
                break;
            }
            if dxw.norm() == 0.0 {
                break;
            }
            w -= residual / dxw;
        }
        if best_residual > tol {
            return Err(EoError::NoConvergence);
        }
        let w = best;
        if (w - z).norm() < cfg.min_separation * dist {
            return Err(EoError::CollapsedToIdentity);
        }
        if (w - alpha).norm() > 3.0 * dist {
            // landed on a far preimage instead of the local partner
            return Err(EoError::NoConvergence);
        }
        let (_, _, dx_z) = curve_xy(self.a, z);
        let (_, _, dx_w) = curve_xy(self.a, w);
        Ok((w, dx_z / dx_w))
    }

    /// The recursion kernel scalar `k(z1, z)` with
    /// `K(z1, z) = k(z1, z) dz1/dz`:
    ///
    /// ```text
    ///   k(z1, z) = z / (2 (zhat^a - z^a)(1 - a z^a))
    ///              * (1/(z - z1) - 1/(zhat - z1))
    /// ```
    pub fn kernel(
        &self,
        z1: Complex64,
        z: Complex64,
        alpha: Complex64,
        cfg: &EOConfig,
    ) -> Result<Complex64, EoError> {
        let (zhat, _) = self.involution(alpha, z, cfg)?;
        self.kernel_given(z1, z, zhat)
    }

    pub(super) fn kernel_given(
        &self,
        z1: Complex64,
        z: Complex64,
        zhat: Complex64,
    ) -> Result<Complex64, EoError> {
        let za = z.powu(self.a);
        let zhata = zhat.powu(self.a);
        let spread = zhata - za;
        let one_m = Complex64::new(1.0, 0.0) - self.a as f64 * za;
        if spread.norm() < 1e-250 || one_m.norm() < 1e-250 {
            return Err(EoError::Degenerate);
        }
        let d1 = z - z1;
        let d2 = zhat - z1;
        if d1.norm() < 1e-250 || d2.norm() < 1e-250 {
            return Err(EoError::PointsTooClose);
        }
        Ok(z / (2.0 * spread * one_m) * (1.0 / d1 - 1.0 / d2))
    }
}

fn pairwise_distinct(points: &[Complex64]) -> bool {
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            if (p - q).norm() < 1e-9 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_values() {
        let (x, y, dx) = curve_xy(1, Complex64::new(0.0, 0.0));
        assert_eq!((x, y, dx.re), (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), 1.0));

        let (x, y, _) = curve_xy(1, Complex64::new(1.0, 0.0));
        assert!((x.re - (-1.0f64).exp()).abs() < 1e-15 && x.im == 0.0);
        assert!((y.re - 1.0).abs() < 1e-15);

        // dx vanishes at the branch point
        let alpha = Complex64::new(0.5f64.sqrt(), 0.0);
        let (_, _, dx) = curve_xy(2, alpha);
        assert!(dx.norm() < 1e-15);
    }

    #[test]
    fn branch_point_layout() {
        let c1 = SpectralCurve::new(1);
        assert_eq!(c1.branch_points().len(), 1);
        assert!((c1.branch_points()[0] - Complex64::new(1.0, 0.0)).norm() < 1e-14);

        let c2 = SpectralCurve::new(2);
        assert!((c2.branch_points()[0].re - 0.5f64.sqrt()).abs() < 1e-14);
        assert!((c2.branch_points()[1].re + 0.5f64.sqrt()).abs() < 1e-14);

        let c4 = SpectralCurve::new(4);
        let modulus = 0.25f64.powf(0.25);
        for (j, alpha) in c4.branch_points().iter().enumerate() {
            assert!((alpha.norm() - modulus).abs() < 1e-14);
            let angle = std::f64::consts::FRAC_PI_2 * j as f64;
            assert!((alpha - Complex64::from_polar(modulus, angle)).norm() < 1e-13);
        }
    }

    #[test]
    fn involution_local_normal_form() {
        // zhat = 2 alpha - z + O(|z - alpha|^2)
        let cfg = EOConfig::default();
        for a in [1u32, 2, 3] {
            let curve = SpectralCurve::new(a);
            let alpha = curve.branch_points()[0];
            for s in [1e-2, 1e-3, 1e-4] {
                let z = alpha + Complex64::new(s, 0.5 * s);
                let (zhat, _) = curve.involution(alpha, z, &cfg).unwrap();
                let defect = (zhat - (2.0 * alpha - z)).norm();
                // quadratic smallness: defect / s^2 stays bounded
                assert!(defect / s / s < 10.0 / curve.scale(), "a = {a}, s = {s}");
            }
        }
    }

    #[test]
    fn involution_against_bisection() {
        // a = 1, z = 1.1: the partner solves w e^(-w) = 1.1 e^(-1.1) in (0, 1).
        let curve = SpectralCurve::new(1);
        let cfg = EOConfig::default();
        let z = Complex64::new(1.1, 0.0);
        let (zhat, _) = curve
            .involution(curve.branch_points()[0], z, &cfg)
            .unwrap();
        let target = 1.1 * (-1.1f64).exp();
        let f = |w: f64| w * (-w).exp() - target;
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        assert!(zhat.im.abs() < 1e-12);
        assert!((zhat.re - lo).abs() < 1e-10, "zhat = {zhat}, bisect = {lo}");
    }

    #[test]
    fn involution_is_involutive() {
        let cfg = EOConfig::default();
        for a in [1u32, 2, 4] {
            let curve = SpectralCurve::new(a);
            for (j, &alpha) in curve.branch_points().iter().enumerate() {
                let z = alpha * Complex64::new(1.08, 0.03);
                let (zhat, dzhat) = curve.involution(alpha, z, &cfg).unwrap();
                let (back, dback) = curve.involution(alpha, zhat, &cfg).unwrap();
                assert!((back - z).norm() < 1e-10, "a = {a}, branch {j}");
                // chain rule around the loop
                assert!((dzhat * dback - 1.0).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn kernel_transformation_under_the_involution() {
        // Swapping z and zhat flips the bracketed difference while the
        // prefactor picks up -dzhat/dz (via dx/x = (1-az^a)/z dz evaluated
        // on both sheets), so the scalar obeys k(z1, zhat) = k(z1, z)
        // dzhat/dz and the form K = k dz1/dz is involution-invariant.
        let cfg = EOConfig::default();
        let curve = SpectralCurve::new(2);
        let alpha = curve.branch_points()[0];
        let z1 = Complex64::new(0.21, 0.11);
        let z = alpha + Complex64::new(0.05, 0.02);
        let (zhat, dzhat) = curve.involution(alpha, z, &cfg).unwrap();
        let k_at_z = curve.kernel_given(z1, z, zhat).unwrap();
        let k_at_zhat = curve.kernel_given(z1, zhat, z).unwrap();
        assert!((k_at_zhat - k_at_z * dzhat).norm() < 1e-9 * k_at_z.norm());
    }

    #[test]
    fn kernel_blows_up_at_the_marked_point() {
        let cfg = EOConfig::default();
        let curve = SpectralCurve::new(1);
        let alpha = curve.branch_points()[0];
        let z = alpha + Complex64::new(0.1, 0.0);
        let far = curve.kernel(Complex64::new(0.3, 0.0), z, alpha, &cfg).unwrap();
        let near = curve
            .kernel(z + Complex64::new(1e-6, 0.0), z, alpha, &cfg)
            .unwrap();
        assert!(near.norm() > 1e4 * far.norm());
    }

    #[test]
    fn kernel_hand_evaluation() {
        // a = 1: k = z / (2 (zhat - z)(1 - z)) * (1/(z-z1) - 1/(zhat-z1))
        let cfg = EOConfig::default();
        let curve = SpectralCurve::new(1);
        let alpha = curve.branch_points()[0];
        let z1 = Complex64::new(0.25, 0.0);
        let z = Complex64::new(1.2, 0.0);
        let (zhat, _) = curve.involution(alpha, z, &cfg).unwrap();
        let by_hand = z / (2.0 * (zhat - z) * (1.0 - z))
            * (1.0 / (z - z1) - 1.0 / (zhat - z1));
        let k = curve.kernel(z1, z, alpha, &cfg).unwrap();
        assert!((k - by_hand).norm() < 1e-14 * by_hand.norm());
    }
}
