//! The Futaki invariant of a test configuration, from polynomial parts of
//! Hilbert and weight quasi-polynomials, and the closed form for deformation
//! to the normal cone of a point divisor on a curve.
//!
//! Conventions: `h(k) = a₀kⁿ + a₁k^{n−1}`, `w(k) = b₀k^{n+1} + b₁kⁿ` are the
//! polynomial parts (periodic corrections of average zero are discarded), and
//! `F₁ = (a₀b₁ − a₁b₀)/a₀²` is the `1/k` coefficient of `w(k)/(k·h(k))`. The
//! weight normalisation is fixed so that
//! `F₁ = (μ(X) − μ_c(I_Z))·∫₀ᶜa₀(x)dx / a₀` for deformation to the normal
//! cone: destabilising configurations have `F₁ < 0`.

use num_traits::Zero;

use super::slope::{curve_slope_data, seshadri_point, slope_ideal, PointDivisor};
use super::StabilityError;
use crate::arith::{format_rational, rat_int, QuasiPolynomial, Rational};
use crate::orbicurve::{OrbiCurve, QDivisor};

/// Hilbert and total-weight quasi-polynomials of a test configuration:
/// `h` of degree `n`, `w` of degree `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestConfigData {
    pub w: QuasiPolynomial,
    pub h: QuasiPolynomial,
}

impl TestConfigData {
    /// Leading weight coefficients `(b₀, b₁)`.
    pub fn b_coeffs(&self) -> (Rational, Rational) {
        let d = self.w.degree();
        (self.w.poly_coeff(d), self.w.poly_coeff(d.saturating_sub(1)))
    }

    /// Leading Hilbert coefficients `(a₀, a₁)`.
    pub fn a_coeffs(&self) -> (Rational, Rational) {
        let d = self.h.degree();
        (self.h.poly_coeff(d), self.h.poly_coeff(d.saturating_sub(1)))
    }
}

/// `F₁ = (a₀b₁ − a₁b₀)/a₀²`, from polynomial parts only.
pub fn futaki_from_qp(tc: &TestConfigData) -> Result<Rational, StabilityError> {
    if tc.w.degree() != tc.h.degree() + 1 {
        return Err(StabilityError::BadPointDivisor(alloc::format!(
            "weight degree {} must exceed Hilbert degree {} by one",
            tc.w.degree(),
            tc.h.degree()
        )));
    }
    let (a0, a1) = tc.a_coeffs();
    let (b0, b1) = tc.b_coeffs();
    if a0.is_zero() {
        return Err(StabilityError::ZeroDenominator);
    }
    Ok((&a0 * b1 - a1 * b0) / (&a0 * &a0))
}

/// Exact Futaki invariant of deformation to the normal cone of the point
/// divisor `Z = q·(p)` with parameter `c`:
/// `F₁ = (μ(X) − μ_c(I_Z))·∫₀ᶜ a₀(x) dx / a₀ = (qc/2)(a₀ − a₁c)/a₀²`.
///
/// Requires `0 < c ≤ ε_orb(Z) = deg L / q` (the endpoint is the polystable
/// boundary).
pub fn futaki_normal_cone(
    curve: &OrbiCurve,
    l: &QDivisor,
    z: &PointDivisor,
    c: &Rational,
) -> Result<Rational, StabilityError> {
    let epsilon = seshadri_point(curve, l, z)?;
    if c <= &Rational::zero() || c > &epsilon {
        return Err(StabilityError::SeshadriExceeded {
            c: format_rational(c),
            epsilon: format_rational(&epsilon),
        });
    }
    let sd = curve_slope_data(curve, l, z)?;
    let mu = sd.mu();
    let mu_c = slope_ideal(&sd, c)?;
    Ok((mu - mu_c) * sd.a0_of_x.integrate_to(c) / &sd.a0)
}

/// Closed form used as an algebraic cross-check of [`futaki_normal_cone`].
pub fn futaki_normal_cone_closed_form(
    deg_l: &Rational,
    deg_k_orb: &Rational,
    q: &Rational,
    c: &Rational,
) -> Rational {
    let a0 = deg_l.clone();
    let a1 = -deg_k_orb / rat_int(2);
    (q * c / rat_int(2)) * (&a0 - a1 * c) / (&a0 * &a0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{qp_fit, rat, RatPoly};
    use crate::orbicurve::Point;
    use alloc::vec;
    use alloc::vec::Vec;

    fn qp_from_values(vals: &[(i64, Rational)], degree: usize, period: u32) -> QuasiPolynomial {
        qp_fit(vals, degree, period).unwrap()
    }

    #[test]
    fn trivial_action_gives_zero() {
        let h: Vec<_> = (1..8).map(|k| (k, rat_int(k + 1))).collect();
        let w: Vec<_> = (1..8).map(|k| (k, rat_int(0))).collect();
        let tc = TestConfigData {
            h: qp_from_values(&h, 1, 1),
            w: qp_from_values(&w, 2, 1),
        };
        assert_eq!(futaki_from_qp(&tc).unwrap(), rat_int(0));
    }

    #[test]
    fn invariant_under_weight_normalisation() {
        // F₁(w + κ·k·h) = F₁(w): shifting by the overall weight κ per power
        // moves (b₀, b₁) by κ(a₀, a₁), which cancels in a₀b₁ − a₁b₀.
        let h: Vec<_> = (1..10).map(|k| (k, rat(1, 2) * rat_int(k) + rat(3, 4))).collect();
        let w: Vec<_> = (1..10)
            .map(|k| (k, rat(1, 4) * rat_int(k * k) + rat(1, 3) * rat_int(k)))
            .collect();
        let hq = qp_from_values(&h, 1, 1);
        let wq = qp_from_values(&w, 2, 1);
        let f1 = futaki_from_qp(&TestConfigData { w: wq, h: hq.clone() }).unwrap();
        for kappa in [rat_int(1), rat(-7, 3)] {
            let shifted: Vec<_> = (1..10)
                .map(|k| {
                    let v = rat(1, 4) * rat_int(k * k)
                        + rat(1, 3) * rat_int(k)
                        + &kappa * rat_int(k) * hq.eval(k);
                    (k, v)
                })
                .collect();
            let wq2 = qp_from_values(&shifted, 2, 1);
            let f2 = futaki_from_qp(&TestConfigData { w: wq2, h: hq.clone() }).unwrap();
            assert_eq!(f1, f2);
        }
    }

    #[test]
    fn periodic_parts_are_ignored() {
        let h: Vec<_> = (0..12).map(|k| (k, rat_int(k / 2 + 1))).collect();
        let hq = qp_from_values(&h, 1, 2);
        let w: Vec<_> = (0..12).map(|k| (k, rat_int(k * k))).collect();
        let wq = qp_from_values(&w, 2, 2);
        let f1 = futaki_from_qp(&TestConfigData { w: wq.clone(), h: hq.clone() }).unwrap();
        let delta = vec![
            RatPoly::from_coeffs(vec![rat(5, 7), rat(1, 9)]),
            RatPoly::from_coeffs(vec![rat(-5, 7), rat(-1, 9)]),
        ];
        let wq2 = wq.with_periodic_perturbation(&delta).unwrap();
        let hq2 = hq.with_periodic_perturbation(&delta).unwrap();
        let f2 = futaki_from_qp(&TestConfigData { w: wq2, h: hq2 }).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn teardrop_normal_cone_value() {
        // (μ(X) − μ_c(I_Z))·∫₀¹a₀/a₀ = (2 − 3)·(1/6)/(1/3) = −1/2.
        let c = OrbiCurve::teardrop(3).unwrap();
        let l = QDivisor::point(Point::zero(), rat(1, 3));
        let z = PointDivisor::orbifold_point(&c, Point::zero()).unwrap();
        let f1 = futaki_normal_cone(&c, &l, &z, &rat_int(1)).unwrap();
        assert_eq!(f1, rat(-1, 2));
        assert_eq!(
            futaki_normal_cone_closed_form(&rat(1, 3), &rat(-4, 3), &rat(1, 3), &rat_int(1)),
            rat(-1, 2)
        );
    }

    #[test]
    fn football_boundary_is_zero() {
        // Z = p₁/m at c = ε = 2 is the polystable boundary.
        for m in [2u32, 3, 5] {
            let c = OrbiCurve::football(m, m).unwrap();
            let l = QDivisor::new(vec![
                (Point::zero(), rat(1, m as i64)),
                (Point::Infinity, rat(1, m as i64)),
            ]);
            let z = PointDivisor::orbifold_point(&c, Point::zero()).unwrap();
            assert_eq!(seshadri_point(&c, &l, &z).unwrap(), rat_int(2));
            assert_eq!(futaki_normal_cone(&c, &l, &z, &rat_int(2)).unwrap(), rat_int(0));
        }
    }

    #[test]
    fn stable_line_has_positive_futaki() {
        let c = OrbiCurve::projective_line();
        let l = QDivisor::point(Point::Infinity, rat_int(1));
        let z = PointDivisor::new(Point::zero(), rat_int(1)).unwrap();
        for cc in [rat(1, 4), rat(1, 2), rat(9, 10)] {
            assert!(futaki_normal_cone(&c, &l, &z, &cc).unwrap() > rat_int(0));
        }
        // Out of range c is rejected.
        assert!(matches!(
            futaki_normal_cone(&c, &l, &z, &rat(3, 2)),
            Err(StabilityError::SeshadriExceeded { .. })
        ));
    }
}
