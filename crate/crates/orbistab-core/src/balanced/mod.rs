//! Numerical engine on orbifold Riemann surfaces: quadrature, Hilb and FS
//! maps, weighted Bergman kernels, the T-iteration towards balanced metrics,
//! scalar-curvature estimation and asymptotic-expansion checks.
//!
//! All pointwise work happens upstairs in cone-cover coordinates, where
//! sections, metrics and densities are smooth; Laplacians are taken by
//! Richardson-extrapolated finite differences in the cover coordinate.

mod background;
mod engine;
mod expansion;
mod quad;
mod scal;

pub use background::BackgroundGeometry;
pub use engine::{
    bergman_fs, bergman_kernel, fs_map, hilb_map, m_matrix, t_iterate, trace_ma_along_orbit,
    BergmanReport, EmbeddedCurve, FsState, IterationState, IterationTrace,
};
pub use expansion::{expansion_check, fit_log_slope, ExpansionReport};
pub use quad::{gauss_legendre_unit, Cap, Node, QuadMode, QuadratureScheme};
pub use scal::{scal_estimate, ScalReport};

use alloc::string::String;
use core::fmt;

/// Errors from the numerical engine.
#[derive(Debug, Clone, PartialEq)]
pub enum NumericError {
    Curve(crate::orbicurve::CurveError),
    Wps(crate::wps::WpsError),
    Linalg(crate::linalg::LinalgError),
    /// Geometry outside the numeric families (markings or support of `L`
    /// away from {0, ∞}, non-monomial bases).
    UnsupportedGeometry(String),
    /// A quadrature self-check failed.
    QuadratureFailure(String),
    /// `ω` density not positive at a node.
    NonPositiveDensity { cap: quad::Cap, radius_sq: f64 },
    /// All sections vanish at a node (k too small for base-point freeness).
    BasePointAt { cap: quad::Cap, radius_sq: f64 },
}

impl fmt::Display for NumericError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericError::Curve(e) => write!(f, "{e}"),
            NumericError::Wps(e) => write!(f, "{e}"),
            NumericError::Linalg(e) => write!(f, "{e}"),
            NumericError::UnsupportedGeometry(s) => write!(f, "unsupported geometry: {s}"),
            NumericError::QuadratureFailure(s) => write!(f, "quadrature failure: {s}"),
            NumericError::NonPositiveDensity { cap, radius_sq } => {
                write!(f, "non-positive ω density on {cap:?} cap at |z|² = {radius_sq}")
            }
            NumericError::BasePointAt { cap, radius_sq } => write!(
                f,
                "all sections vanish on {cap:?} cap at |z|² = {radius_sq} (k too small?)"
            ),
        }
    }
}

impl core::error::Error for NumericError {}

impl From<crate::wps::WpsError> for NumericError {
    fn from(e: crate::wps::WpsError) -> Self {
        NumericError::Wps(e)
    }
}

impl From<crate::linalg::LinalgError> for NumericError {
    fn from(e: crate::linalg::LinalgError) -> Self {
        NumericError::Linalg(e)
    }
}
