//! Exact slope-stability and K-stability calculators.
//!
//! Slopes are ratios of Hilbert-coefficient integrals; the Futaki invariant
//! of a test configuration is built from the polynomial parts of its Hilbert
//! and weight quasi-polynomials. Deformation to the normal cone of a
//! point-supported divisor admits both a closed-form Futaki invariant and a
//! brute-force weight enumeration; the two routes agree exactly and serve as
//! each other's oracle.

mod brute;
mod checks;
mod classify;
mod futaki;
mod slope;

pub use brute::{oracle_futaki, weights_brute_force, BruteForceWeights};
pub use checks::{
    index_check, pardeg, parabolic_ruled_check, pn_hyperplane_check, wps_check, IndexReport,
    ParabolicPoint, PnHyperplaneReport,
};
pub use classify::{classify_curve, destabilized_by_point_search};
pub use futaki::{futaki_from_qp, futaki_normal_cone, TestConfigData};
pub use slope::{seshadri_point, slope_ideal, slope_orb, slope_quotient, PointDivisor, SlopeData};

use alloc::string::String;
use core::fmt;

use crate::arith::Rational;

/// Stability status of a polarised orbifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Stable,
    /// Semistable but not stable (polystable boundary cases).
    SemistableBoundary,
    Unstable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Stable => write!(f, "stable"),
            Status::SemistableBoundary => write!(f, "semistable-boundary"),
            Status::Unstable => write!(f, "unstable"),
        }
    }
}

/// The destabilising (or boundary) data: the point divisor `Z = q·p`, the
/// parameter `c`, and the slopes that witness the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub point: String,
    pub q: Rational,
    pub c: Rational,
    pub mu_x: Rational,
    pub mu_c_oz: Rational,
    pub mu_c_iz: Rational,
}

/// Verdict of a stability test. A witness is present exactly when the status
/// is not `Stable`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub status: Status,
    pub witness: Option<Witness>,
}

impl StabilityVerdict {
    pub fn stable() -> Self {
        StabilityVerdict { status: Status::Stable, witness: None }
    }
}

/// Errors from stability computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityError {
    NotAmple(String),
    /// `q ≤ 0` or the point divisor is malformed.
    BadPointDivisor(String),
    /// `c` outside `(0, ε_orb(Z)]`.
    SeshadriExceeded { c: String, epsilon: String },
    /// Degenerate slope: the denominator integral vanishes.
    ZeroDenominator,
    /// `ck` must be a nonnegative integer for the weight enumeration.
    NonIntegralCk,
    /// Adiabatic parameter not positive in the ruled-surface check.
    NonAdiabatic,
    /// Empty weight tuple.
    EmptyWeights,
    /// Hyperplane list length must be n + 2.
    WrongLength { expected: usize, got: usize },
    /// `r ≤ 0` in the index obstruction.
    NonPositiveIndex,
    Curve(crate::orbicurve::CurveError),
    Arith(crate::arith::ArithError),
}

impl fmt::Display for StabilityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabilityError::NotAmple(r) => write!(f, "bundle not orbi-ample: {r}"),
            StabilityError::BadPointDivisor(r) => write!(f, "bad point divisor: {r}"),
            StabilityError::SeshadriExceeded { c, epsilon } => {
                write!(f, "c = {c} exceeds the Seshadri constant {epsilon}")
            }
            StabilityError::ZeroDenominator => write!(f, "degenerate slope (zero denominator)"),
            StabilityError::NonIntegralCk => write!(f, "ck must be a nonnegative integer"),
            StabilityError::NonAdiabatic => {
                write!(f, "rm + (r-1)μ(Σ) - rμ_E must be positive (adiabatic regime)")
            }
            StabilityError::EmptyWeights => write!(f, "weight tuple must be nonempty"),
            StabilityError::WrongLength { expected, got } => {
                write!(f, "expected {expected} orders, got {got}")
            }
            StabilityError::NonPositiveIndex => write!(f, "index ratio r must be positive"),
            StabilityError::Curve(e) => write!(f, "{e}"),
            StabilityError::Arith(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for StabilityError {}

impl From<crate::orbicurve::CurveError> for StabilityError {
    fn from(e: crate::orbicurve::CurveError) -> Self {
        StabilityError::Curve(e)
    }
}

impl From<crate::arith::ArithError> for StabilityError {
    fn from(e: crate::arith::ArithError) -> Self {
        StabilityError::Arith(e)
    }
}
