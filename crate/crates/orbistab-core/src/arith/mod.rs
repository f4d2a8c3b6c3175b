//! Exact rational arithmetic: polynomials, quasi-polynomials with periodic
//! corrections, and the weight sequence `c_i`.
//!
//! A quasi-polynomial here is a polynomial with rational coefficients plus a
//! periodic correction of average zero, the shape produced by orbifold
//! Riemann–Roch. The decomposition is made unique by defining the polynomial
//! part as the average of the per-residue interpolating polynomials.

mod poly;
mod quasi;
mod quasi2;
pub(crate) mod weights;

pub use poly::{solve_exact, RatPoly, RatPoly2};
pub use quasi::{qp_fit, QuasiPolynomial};
pub use quasi2::{qp2_fit, QuasiPolynomial2};
pub use weights::{ci_weights, residue_moment, weighted_shift_sum, WeightSequence};

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (maintained by `num_rational`).
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"num/den"` or `"num"` with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| ArithError::BadRational(String::from(s)))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| ArithError::BadRational(String::from(s)))?,
        None => BigInt::from(1),
    };
    if d == BigInt::from(0) {
        return Err(ArithError::BadRational(String::from(s)));
    }
    Ok(Rational::new(n, d))
}

/// Formats as `"num/den"`, or `"num"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    use alloc::format;
    if r.denom() == &BigInt::from(1) {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Errors from exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Could not parse a rational literal.
    BadRational(String),
    /// A residue class has fewer distinct sample points than `degree + 1`.
    InsufficientSamples { residue: u32, have: usize, need: usize },
    /// No quasi-polynomial of the requested degree/period passes through the
    /// samples.
    InconsistentSamples,
    /// The period of a quasi-polynomial does not divide the weight order.
    PeriodMismatch { period: u32, ord: u32 },
    /// Singular exact linear system.
    SingularSystem,
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::BadRational(s) => write!(f, "cannot parse rational: {s:?}"),
            ArithError::InsufficientSamples { residue, have, need } => write!(
                f,
                "residue class {residue}: {have} distinct samples, need at least {need}"
            ),
            ArithError::InconsistentSamples => {
                write!(f, "no quasi-polynomial of this degree/period fits the samples")
            }
            ArithError::PeriodMismatch { period, ord } => {
                write!(f, "period {period} does not divide weight order {ord}")
            }
            ArithError::SingularSystem => write!(f, "singular exact linear system"),
        }
    }
}

impl core::error::Error for ArithError {}
