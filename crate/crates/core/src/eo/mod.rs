//! Floating-point topological recursion on the curve
//! `x = z exp(-z^a)`, `y = z^a`.
//!
//! The recursion produces multidifferentials `w_{g,n}` with poles at the
//! zeros of `dx`; every residue it needs is computed by trapezoidal
//! quadrature on small circles around those zeros, which converges
//! geometrically because the integrands are meromorphic.  The local
//! involution `z -> zhat` with `x(zhat) = x(z)` is found by Newton
//! iteration, and its derivative comes from the exact relation
//! `dzhat/dz = x'(z)/x'(zhat)`, never from finite differences.
//!
//! The scalars returned here are coefficients of `dz_1 ... dz_n`; they are
//! compared pointwise against the exact generating-function side in
//! [`verify_expansion`].

mod curve;
mod recursion;
mod residues;
mod verify;

pub use curve::{curve_xy, SpectralCurve};
pub use recursion::{omega_eval, omega_first_variable_residue};
pub use residues::{residue_identity, ResidueKind};
pub use verify::{verify_expansion, ExpansionReport, ExpansionSample, SplitMix64};

use thiserror::Error;

use crate::exact::ExactError;
use crate::xibasis::XiError;

/// Numeric parameters of the residue engine.
#[derive(Clone, Debug)]
pub struct EOConfig {
    /// Trapezoid nodes per residue circle.
    pub quad_points: usize,
    /// Circle radius as a fraction of the distance from the branch point to
    /// the nearest other singularity (other branch points, the origin, and
    /// the current evaluation points).  Must stay below 1/2 so the circle
    /// remains inside the involution's validity disk.
    pub radius_factor: f64,
    /// Relative residual target for the involution Newton iteration.
    pub newton_tol: f64,
    pub newton_max_iter: u32,
    /// Minimum admissible distance between evaluation points, in units of
    /// the natural scale `a^(-1/a)`.
    pub min_separation: f64,
}

impl Default for EOConfig {
    fn default() -> Self {
        EOConfig {
            quad_points: 64,
            radius_factor: 0.25,
            newton_tol: 1e-13,
            newton_max_iter: 60,
            min_separation: 1e-3,
        }
    }
}

impl EOConfig {
    pub fn validate(&self) -> Result<(), EoError> {
        let ok = self.quad_points >= 4
            && self.radius_factor > 0.0
            && self.radius_factor < 0.5
            && self.newton_tol > 0.0
            && self.newton_max_iter > 0
            && self.min_separation > 0.0;
        if ok {
            Ok(())
        } else {
            Err(EoError::InvalidInput(
                "config out of range (need quad_points >= 4, 0 < radius_factor < 1/2, positive tolerances)"
                    .into(),
            ))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EoError {
    #[error("Newton iteration for the involution did not converge")]
    NoConvergence,
    /// The involution Newton solve fell back onto the input point.
    #[error("involution collapsed to the identity")]
    CollapsedToIdentity,
    /// Kernel denominator vanished (the two preimages merged).
    #[error("degenerate kernel")]
    Degenerate,
    #[error("evaluation points too close together or to a branch point")]
    PointsTooClose,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl From<XiError> for EoError {
    fn from(e: XiError) -> Self {
        match e {
            XiError::Exact(inner) => EoError::Exact(inner),
            other => EoError::InvalidInput(other.to_string()),
        }
    }
}
