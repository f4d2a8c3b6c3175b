//! Explicit bases of `H⁰` of the round-down of a Q-divisor on a genus-0
//! curve, as rational functions in the affine coordinate.
//!
//! For `⌊D⌋ = Σ a_j (q_j) + a_∞ (∞)` a section is `P(x) / ∏_{a_j>0}(x−q_j)^{a_j}`
//! where `P` vanishes to order `−a_j` at points with `a_j < 0` and
//! `deg P ≤ Σ_{a_j>0} a_j + a_∞`. The basis is `Z(x)·x^t` over the forced
//! zero factor `Z`.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::curve::OrbiCurve;
use super::divisor::{Point, QDivisor};
use super::CurveError;
use crate::arith::{rat_int, RatPoly, Rational};

/// Basis of the sections of an orbifold line bundle on a genus-0 curve.
#[derive(Debug, Clone)]
pub struct SectionBasis {
    divisor: QDivisor,
    /// Finite points with positive round-down coefficient and the pole order
    /// allowed there: the common denominator `∏ (x − q_j)^{d_j}`.
    denominator: Vec<(Rational, i64)>,
    /// Numerator polynomials, one per basis element.
    numerators: Vec<RatPoly>,
}

impl SectionBasis {
    /// Builds the basis for `H⁰(round_down(D))`; empty when `h⁰ = 0`.
    pub fn build(curve: &OrbiCurve, divisor: &QDivisor) -> Result<Self, CurveError> {
        if curve.genus() != 0 {
            return Err(CurveError::GenusOutOfScope { genus: curve.genus() });
        }
        curve.validate_divisor(divisor)?;
        let rd = divisor.round_down();
        let deg = rd
            .degree()
            .to_integer()
            .to_i64()
            .expect("degree out of range");

        let mut denominator = Vec::new();
        let mut forced_zero = RatPoly::constant(Rational::one());
        for (p, c) in rd.terms() {
            let a = c.to_integer().to_i64().expect("coefficient out of range");
            match p {
                Point::Finite(q) => {
                    if a > 0 {
                        denominator.push((q.clone(), a));
                    } else if a < 0 {
                        // (x - q)^{-a} divides every numerator.
                        let lin = RatPoly::from_coeffs(alloc::vec![-q.clone(), Rational::one()]);
                        for _ in 0..(-a) {
                            forced_zero = forced_zero.mul(&lin);
                        }
                    }
                }
                Point::Infinity => {}
            }
        }

        let mut numerators = Vec::new();
        if deg >= 0 {
            let mut power = RatPoly::constant(Rational::one());
            let x = RatPoly::from_coeffs(alloc::vec![Rational::zero(), Rational::one()]);
            for _ in 0..=deg {
                numerators.push(forced_zero.mul(&power));
                power = power.mul(&x);
            }
        }
        Ok(SectionBasis {
            divisor: divisor.clone(),
            denominator,
            numerators,
        })
    }

    pub fn divisor(&self) -> &QDivisor {
        &self.divisor
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn numerators(&self) -> &[RatPoly] {
        &self.numerators
    }

    pub fn denominator_factors(&self) -> &[(Rational, i64)] {
        &self.denominator
    }

    /// Order of vanishing of section `idx` at a point, as a rational function
    /// in `x` (poles count negative). At `∞` this is `−(deg numerator − deg denominator)`.
    pub fn vanishing_order_x(&self, idx: usize, p: &Point) -> i64 {
        let num = &self.numerators[idx];
        match p {
            Point::Infinity => {
                let dn = num.degree().map(|d| d as i64).unwrap_or(i64::MIN / 2);
                let dd: i64 = self.denominator.iter().map(|(_, d)| *d).sum();
                dd - dn
            }
            Point::Finite(q) => {
                let pole: i64 = self
                    .denominator
                    .iter()
                    .find(|(r, _)| r == q)
                    .map(|(_, d)| *d)
                    .unwrap_or(0);
                root_order(num, q) - pole
            }
        }
    }

    /// Order of vanishing in the orbifold chart at `p`: with local cover
    /// coordinate `z`, `z^m = x − p`, a section of the bundle with coefficient
    /// `γ` at `p` lifts to `z^{m·γ + m·ord_x}·(unit)`.
    pub fn vanishing_order_chart(&self, curve: &OrbiCurve, idx: usize, p: &Point) -> i64 {
        let m = curve.order_at(p) as i64;
        let gamma = self.divisor.coefficient_at(p);
        let m_gamma = (&gamma * rat_int(m)).to_integer().to_i64().expect("m·γ integral");
        m * self.vanishing_order_x(idx, p) + m_gamma
    }

    /// Exact evaluation at a rational parameter (used for independence
    /// checks); `None` at a pole of the denominator.
    pub fn eval_rational(&self, idx: usize, x: &Rational) -> Option<Rational> {
        let mut den = Rational::one();
        for (q, d) in &self.denominator {
            let f = x - q;
            if f.is_zero() {
                return None;
            }
            for _ in 0..*d {
                den *= &f;
            }
        }
        Some(self.numerators[idx].eval(x) / den)
    }

    /// Numerical evaluation at a complex chart coordinate.
    pub fn eval_complex(&self, idx: usize, x: Complex64) -> Complex64 {
        let mut num = Complex64::new(0.0, 0.0);
        for c in self.numerators[idx].coeffs().iter().rev() {
            num = num * x + Complex64::new(rational_f64(c), 0.0);
        }
        let mut den = Complex64::new(1.0, 0.0);
        for (q, d) in &self.denominator {
            let f = x - Complex64::new(rational_f64(q), 0.0);
            for _ in 0..*d {
                den *= f;
            }
        }
        num / den
    }
}

fn rational_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Multiplicity of `q` as a root of `p` (0 when `p(q) ≠ 0`).
fn root_order(p: &RatPoly, q: &Rational) -> i64 {
    if p.is_zero() {
        return i64::MAX / 2;
    }
    let mut current = p.clone();
    let mut order = 0;
    while current.eval(q).is_zero() {
        // Exact deflation by (x - q).
        let coeffs = current.coeffs();
        let mut quotient = alloc::vec![Rational::zero(); coeffs.len().saturating_sub(1)];
        let mut carry = Rational::zero();
        for i in (0..coeffs.len()).rev() {
            let v = &coeffs[i] + &carry * q;
            if i == 0 {
                debug_assert!(v.is_zero());
            } else {
                quotient[i - 1] = v.clone();
            }
            carry = v;
        }
        current = RatPoly::from_coeffs(quotient);
        order += 1;
        if current.is_zero() {
            break;
        }
    }
    order
}

/// Convenience: the basis for `L^k`.
pub fn power_basis(
    curve: &OrbiCurve,
    l: &QDivisor,
    k: i64,
) -> Result<SectionBasis, CurveError> {
    SectionBasis::build(curve, &l.scale_int(k))
}
