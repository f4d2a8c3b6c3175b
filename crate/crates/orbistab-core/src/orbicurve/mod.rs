//! Orbifold Riemann surfaces, orbifold line bundles as Q-divisors, and exact
//! section spaces (genus 0).
//!
//! A genus-0 orbifold curve is the projective line with marked points carrying
//! stabiliser orders; an orbifold line bundle is a Q-divisor whose
//! denominators divide the local orders. Sections of a power are the sections
//! of the round-down on the underlying curve, realised here as rational
//! functions in the affine coordinate.

mod curve;
mod divisor;
mod sections;

pub use curve::{CanonicalClass, Marking, OrbiCurve, PeriodicPartStatus};
pub use divisor::{Point, QDivisor};
pub use sections::{power_basis, SectionBasis};

use alloc::string::String;
use core::fmt;

/// Errors from curve/divisor construction and section-space queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    DuplicateMarking(String),
    BadOrder { label: String, order: u32 },
    MissingCoordinate(String),
    /// Divisor coefficient denominator does not divide the local order.
    BadDenominator { at: String },
    /// Coefficient at an unmarked point must be an integer.
    NonIntegralCoefficient { at: String },
    /// Operation restricted to genus 0.
    GenusOutOfScope { genus: u32 },
    /// The bundle is not orbi-ample; the string names the failure.
    NotAmple(String),
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::DuplicateMarking(l) => write!(f, "duplicate marked coordinate at {l}"),
            CurveError::BadOrder { label, order } => {
                write!(f, "marking {label}: order {order} must be at least 2")
            }
            CurveError::MissingCoordinate(l) => {
                write!(f, "marking {l}: genus-0 markings need a coordinate")
            }
            CurveError::BadDenominator { at } => {
                write!(f, "coefficient denominator at {at} does not divide the marking order")
            }
            CurveError::NonIntegralCoefficient { at } => {
                write!(f, "coefficient at unmarked point {at} must be integral")
            }
            CurveError::GenusOutOfScope { genus } => {
                write!(f, "exact sections require genus 0 (got genus {genus})")
            }
            CurveError::NotAmple(reason) => write!(f, "bundle is not orbi-ample: {reason}"),
        }
    }
}

impl core::error::Error for CurveError {}
