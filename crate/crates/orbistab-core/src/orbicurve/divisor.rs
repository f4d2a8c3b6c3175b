//! Points of the projective line and Q-divisors supported on them.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

use crate::arith::{format_rational, rat_int, Rational};

/// A point of the projective line: an affine coordinate or the point at
/// infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl Point {
    pub fn finite(n: i64, d: i64) -> Self {
        Point::Finite(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero() -> Self {
        Point::Finite(Rational::zero())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(x) => write!(f, "{}", format_rational(x)),
            Point::Infinity => write!(f, "infinity"),
        }
    }
}

/// A divisor with rational coefficients: a finite formal sum of points.
/// Terms are kept sorted by point with nonzero, merged coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QDivisor {
    terms: Vec<(Point, Rational)>,
}

impl QDivisor {
    pub fn zero() -> Self {
        QDivisor { terms: Vec::new() }
    }

    pub fn new(terms: Vec<(Point, Rational)>) -> Self {
        let mut merged: Vec<(Point, Rational)> = Vec::new();
        for (p, c) in terms {
            match merged.iter_mut().find(|(q, _)| *q == p) {
                Some((_, acc)) => *acc += c,
                None => merged.push((p, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        merged.sort_by(|a, b| a.0.cmp(&b.0));
        QDivisor { terms: merged }
    }

    /// Single term `c·(p)`.
    pub fn point(p: Point, c: Rational) -> Self {
        QDivisor::new(alloc::vec![(p, c)])
    }

    pub fn terms(&self) -> &[(Point, Rational)] {
        &self.terms
    }

    pub fn coefficient_at(&self, p: &Point) -> Rational {
        self.terms
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Degree: the sum of the coefficients.
    pub fn degree(&self) -> Rational {
        self.terms.iter().map(|(_, c)| c.clone()).sum()
    }

    pub fn add(&self, other: &QDivisor) -> QDivisor {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        QDivisor::new(terms)
    }

    pub fn scale(&self, s: &Rational) -> QDivisor {
        QDivisor::new(
            self.terms
                .iter()
                .map(|(p, c)| (p.clone(), c * s))
                .collect(),
        )
    }

    pub fn scale_int(&self, k: i64) -> QDivisor {
        self.scale(&rat_int(k))
    }

    /// Coefficient-wise floor.
    pub fn round_down(&self) -> QDivisor {
        QDivisor::new(
            self.terms
                .iter()
                .map(|(p, c)| (p.clone(), Rational::from_integer(c.floor().to_integer())))
                .collect(),
        )
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.denom().is_one())
    }

    /// True when `self ≤ other` coefficient-wise.
    pub fn le(&self, other: &QDivisor) -> bool {
        let mut points: Vec<&Point> = self.terms.iter().map(|(p, _)| p).collect();
        points.extend(other.terms.iter().map(|(p, _)| p));
        points.sort();
        points.dedup();
        points
            .into_iter()
            .all(|p| self.coefficient_at(p) <= other.coefficient_at(p))
    }

    pub fn describe(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&format_rational(c));
            out.push_str("·(");
            out.push_str(&p.to_string());
            out.push(')');
        }
        out
    }
}

/// Reduced denominator of a rational as u64 (coefficients here are tiny).
pub(crate) fn denominator_u64(c: &Rational) -> u64 {
    use num_traits::ToPrimitive;
    c.denom().abs().to_u64().expect("denominator out of range")
}

pub(crate) fn divides(d: u64, m: u64) -> bool {
    m % d == 0
}
