//! Slopes from Hilbert-coefficient data: `μ(X) = a₁/a₀` and the two slopes
//! `μ_c(I_Z)`, `μ_c(O_Z)` of a sub-orbischeme, as integrals of the
//! coefficient polynomials `a_i(x)` of the blow-up.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;

use num_traits::Zero;

use super::StabilityError;
use crate::arith::{rat, rat_int, RatPoly, Rational};
use crate::orbicurve::{OrbiCurve, Point, QDivisor};

/// Hilbert data of `(X, L)` together with the coefficient polynomials of
/// `h⁰(L^k(−xkE))`: `a₀(x)`, `a₁(x)` with `a_i(0) = a_i` and `a₀ > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeData {
    pub n: u32,
    pub a0: Rational,
    pub a1: Rational,
    pub a0_of_x: RatPoly,
    pub a1_of_x: RatPoly,
}

impl SlopeData {
    pub fn new(
        n: u32,
        a0_of_x: RatPoly,
        a1_of_x: RatPoly,
    ) -> Result<Self, StabilityError> {
        let a0 = a0_of_x.eval(&Rational::zero());
        let a1 = a1_of_x.eval(&Rational::zero());
        if a0 <= Rational::zero() {
            return Err(StabilityError::BadPointDivisor(
                "leading Hilbert coefficient must be positive".to_string(),
            ));
        }
        Ok(SlopeData { n, a0, a1, a0_of_x, a1_of_x })
    }

    /// Curve (`n = 1`) with a point divisor of degree `q`: blowing up is
    /// trivial, so `a₀(x) = deg L − qx` and `a₁(x) = −½ deg K_orb`.
    pub fn curve_point(
        deg_l: Rational,
        deg_k_orb: Rational,
        q: Rational,
    ) -> Result<Self, StabilityError> {
        let a0_of_x = RatPoly::from_coeffs(vec![deg_l, -q]);
        let a1_of_x = RatPoly::constant(-deg_k_orb / rat_int(2));
        SlopeData::new(1, a0_of_x, a1_of_x)
    }

    /// Surface (`n = 2`) blown up along a divisor `Z`, from the intersection
    /// numbers `L²`, `K_orb·L`, `L·Z`, `K_orb·Z`, `Z²`.
    pub fn surface_divisor(
        l2: Rational,
        kl: Rational,
        lz: Rational,
        kz: Rational,
        z2: Rational,
    ) -> Result<Self, StabilityError> {
        // a₀(x) = (L − xZ)²/2!, a₁(x) = −K_orb·(L − xZ)/2 (codimension 1: no
        // exceptional correction to the canonical class).
        let a0_of_x = RatPoly::from_coeffs(vec![
            l2 / rat_int(2),
            -lz.clone(),
            z2.clone() / rat_int(2),
        ]);
        let a1_of_x = RatPoly::from_coeffs(vec![-kl / rat_int(2), kz / rat_int(2)]);
        SlopeData::new(2, a0_of_x, a1_of_x)
    }

    /// The smallest `Z` in dimension `n`: a reduced fixed point upstairs in a
    /// chart, entering with multiplicity `s` (the reciprocal of the
    /// stabiliser order at the point).
    ///
    /// `a₀(x) = a₀ − s·xⁿ/n!`, `a₁(x) = a₁ − s(n−1)x^{n−1}/(2(n−1)!)`.
    pub fn smallest_point(
        n: u32,
        a0: Rational,
        a1: Rational,
        s: Rational,
    ) -> Result<Self, StabilityError> {
        let mut a0_coeffs = vec![Rational::zero(); n as usize + 1];
        a0_coeffs[0] = a0;
        a0_coeffs[n as usize] = -&s / rat_int(factorial(n));
        let mut a1_coeffs = vec![Rational::zero(); n as usize];
        a1_coeffs[0] = a1;
        if n >= 1 {
            a1_coeffs[n as usize - 1] =
                -s * rat_int(n as i64 - 1) / (rat_int(2) * rat_int(factorial(n - 1)));
        }
        SlopeData::new(n, RatPoly::from_coeffs(a0_coeffs), RatPoly::from_coeffs(a1_coeffs))
    }

    /// `μ(X, L) = a₁/a₀`.
    pub fn mu(&self) -> Rational {
        &self.a1 / &self.a0
    }
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product::<i64>().max(1)
}

/// A point-supported Q-divisor `Z = q·(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointDivisor {
    pub point: Point,
    pub q: Rational,
}

impl PointDivisor {
    pub fn new(point: Point, q: Rational) -> Result<Self, StabilityError> {
        if q <= Rational::zero() {
            return Err(StabilityError::BadPointDivisor(format!(
                "degree q = {q} must be positive"
            )));
        }
        Ok(PointDivisor { point, q })
    }

    /// The orbifold point `p/m` at a marked point of order `m`.
    pub fn orbifold_point(curve: &OrbiCurve, point: Point) -> Result<Self, StabilityError> {
        let m = curve.order_at(&point);
        PointDivisor::new(point, rat(1, m as i64))
    }

    pub fn as_divisor(&self) -> QDivisor {
        QDivisor::point(self.point.clone(), self.q.clone())
    }
}

/// `μ(X, L) = a₁/a₀`; for an orbifold curve this is
/// `(1 − g − ½Σ(1 − 1/m_i)) / deg L`.
pub fn slope_orb(curve: &OrbiCurve, l: &QDivisor) -> Result<Rational, StabilityError> {
    let (ample, reason) = curve.is_orbi_ample(l);
    if !ample {
        return Err(StabilityError::NotAmple(reason));
    }
    Ok(-curve.canonical_orb().degree / (rat_int(2) * l.degree()))
}

/// Seshadri constant of a point divisor on a curve: `ε_orb(Z) = deg L / q`.
/// For `Z = p/m` this is `m·deg L`, m times the usual Seshadri constant.
pub fn seshadri_point(
    curve: &OrbiCurve,
    l: &QDivisor,
    z: &PointDivisor,
) -> Result<Rational, StabilityError> {
    let (ample, reason) = curve.is_orbi_ample(l);
    if !ample {
        return Err(StabilityError::NotAmple(reason));
    }
    Ok(l.degree() / &z.q)
}

/// Quotient slope `μ_c(O_Z) = (∫₀ᶜ ã₁(x) + ½ã₀′(x) dx) / ∫₀ᶜ ã₀(x) dx` with
/// `ã_i = a_i − a_i(x)`.
pub fn slope_quotient(sd: &SlopeData, c: &Rational) -> Result<Rational, StabilityError> {
    if c <= &Rational::zero() {
        return Err(StabilityError::BadPointDivisor("c must be positive".to_string()));
    }
    let a0_tilde = RatPoly::constant(sd.a0.clone()).sub(&sd.a0_of_x);
    let a1_tilde = RatPoly::constant(sd.a1.clone()).sub(&sd.a1_of_x);
    let num = a1_tilde
        .add(&a0_tilde.derivative().scale(&rat(1, 2)))
        .integrate_to(c);
    let den = a0_tilde.integrate_to(c);
    if den.is_zero() {
        return Err(StabilityError::ZeroDenominator);
    }
    Ok(num / den)
}

/// Slope of the ideal sheaf,
/// `μ_c(I_Z) = (∫₀ᶜ a₁(x) + ½a₀′(x) dx) / ∫₀ᶜ a₀(x) dx`.
pub fn slope_ideal(sd: &SlopeData, c: &Rational) -> Result<Rational, StabilityError> {
    if c <= &Rational::zero() {
        return Err(StabilityError::BadPointDivisor("c must be positive".to_string()));
    }
    let num = sd
        .a1_of_x
        .add(&sd.a0_of_x.derivative().scale(&rat(1, 2)))
        .integrate_to(c);
    let den = sd.a0_of_x.integrate_to(c);
    if den.is_zero() {
        return Err(StabilityError::ZeroDenominator);
    }
    Ok(num / den)
}

/// Curve slope data for `(X, L)` and a point divisor `Z`.
pub fn curve_slope_data(
    curve: &OrbiCurve,
    l: &QDivisor,
    z: &PointDivisor,
) -> Result<SlopeData, StabilityError> {
    let (ample, reason) = curve.is_orbi_ample(l);
    if !ample {
        return Err(StabilityError::NotAmple(reason));
    }
    SlopeData::curve_point(l.degree(), curve.canonical_orb().degree, z.q.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn teardrop3_data() -> (OrbiCurve, QDivisor, PointDivisor) {
        let c = OrbiCurve::teardrop(3).unwrap();
        let l = QDivisor::point(Point::zero(), rat(1, 3));
        let z = PointDivisor::orbifold_point(&c, Point::zero()).unwrap();
        (c, l, z)
    }

    #[test]
    fn slope_examples() {
        let (c, l, _) = teardrop3_data();
        assert_eq!(slope_orb(&c, &l).unwrap(), rat_int(2));

        let f = OrbiCurve::football(2, 2).unwrap();
        let lf = QDivisor::new(vec![
            (Point::zero(), rat(1, 2)),
            (Point::Infinity, rat(1, 2)),
        ]);
        assert_eq!(slope_orb(&f, &lf).unwrap(), rat(1, 2));

        let p1 = OrbiCurve::projective_line();
        let o1 = QDivisor::point(Point::Infinity, rat_int(1));
        assert_eq!(slope_orb(&p1, &o1).unwrap(), rat_int(1));
    }

    #[test]
    fn seshadri_examples() {
        let (c, l, z) = teardrop3_data();
        assert_eq!(seshadri_point(&c, &l, &z).unwrap(), rat_int(1));

        let f = OrbiCurve::football(5, 5).unwrap();
        let lf = QDivisor::new(vec![
            (Point::zero(), rat(1, 5)),
            (Point::Infinity, rat(1, 5)),
        ]);
        let zf = PointDivisor::orbifold_point(&f, Point::zero()).unwrap();
        assert_eq!(seshadri_point(&f, &lf, &zf).unwrap(), rat_int(2));

        let p1 = OrbiCurve::projective_line();
        let o1 = QDivisor::point(Point::Infinity, rat_int(1));
        let zp = PointDivisor::new(Point::zero(), rat_int(1)).unwrap();
        assert_eq!(seshadri_point(&p1, &o1, &zp).unwrap(), rat_int(1));
    }

    #[test]
    fn quotient_slope_of_curve_point_is_inverse_c() {
        for q in [rat(1, 3), rat(1, 2), rat_int(1), rat(2, 5)] {
            let sd = SlopeData::curve_point(rat(1, 3), rat(-4, 3), q).unwrap();
            for c in [rat(1, 2), rat_int(1), rat(3, 4)] {
                assert_eq!(slope_quotient(&sd, &c).unwrap(), rat_int(1) / &c);
            }
        }
    }

    #[test]
    fn quotient_slope_of_smallest_point() {
        // μ_c(O_Z) = n(n+1)/(2c), independent of the stabiliser multiplicity.
        for n in [1u32, 2, 3] {
            for s in [rat_int(1), rat(1, 4)] {
                let sd = SlopeData::smallest_point(n, rat_int(2), rat(1, 3), s).unwrap();
                let c = rat(2, 3);
                assert_eq!(
                    slope_quotient(&sd, &c).unwrap(),
                    rat_int((n * (n + 1)) as i64) / (rat_int(2) * &c)
                );
            }
        }
    }

    #[test]
    fn quotient_slope_surface_closed_form() {
        // 3(2L·Z − c(K·Z + Z²)) / (2c(3L·Z − cZ²)) against the integral route.
        let (l2, kl, lz, kz, z2) = (rat_int(4), rat_int(-6), rat_int(2), rat(-3, 2), rat_int(-1));
        let sd = SlopeData::surface_divisor(l2, kl, lz.clone(), kz.clone(), z2.clone()).unwrap();
        for c in [rat(1, 2), rat_int(1), rat(5, 4)] {
            let closed = rat_int(3) * (rat_int(2) * &lz - &c * (&kz + &z2))
                / (rat_int(2) * &c * (rat_int(3) * &lz - &c * &z2));
            assert_eq!(slope_quotient(&sd, &c).unwrap(), closed);
        }
    }

    #[test]
    fn ideal_slope_teardrop() {
        let (c, l, z) = teardrop3_data();
        let sd = curve_slope_data(&c, &l, &z).unwrap();
        assert_eq!(slope_ideal(&sd, &rat_int(1)).unwrap(), rat_int(3));
    }

    #[test]
    fn ideal_slope_small_c_limit() {
        // slope_ideal(c) → μ(X) + ½a₀′(0)/a₀ as c → 0, with O(c) error.
        let sd = SlopeData::curve_point(rat(1, 2), rat(-3, 2), rat(1, 2)).unwrap();
        let limit = sd.mu()
            + sd.a0_of_x.derivative().eval(&Rational::zero()) / (rat_int(2) * &sd.a0);
        for c in [rat(1, 100), rat(1, 1000)] {
            let v = slope_ideal(&sd, &c).unwrap();
            let mut err = v - &limit;
            if err < Rational::zero() {
                err = -err;
            }
            assert!(err < c);
        }
    }

    #[test]
    fn ideal_slope_empty_z_is_mu() {
        let sd = SlopeData::new(
            1,
            RatPoly::constant(rat(1, 3)),
            RatPoly::constant(rat(2, 3)),
        )
        .unwrap();
        assert_eq!(slope_ideal(&sd, &rat_int(1)).unwrap(), sd.mu());
        // The quotient slope is degenerate for empty Z.
        assert_eq!(
            slope_quotient(&sd, &rat_int(1)),
            Err(StabilityError::ZeroDenominator)
        );
    }

    #[test]
    fn see_saw_identity() {
        // sign(μ_c(I_Z) − μ(X)) = −sign(μ_c(O_Z) − μ(X)) for curve data.
        let cases = [
            (rat(1, 3), rat(-4, 3), rat(1, 3), rat_int(1)),
            (rat_int(1), rat_int(-2), rat_int(1), rat(1, 2)),
            (rat_int(1), rat_int(-2), rat_int(1), rat(99, 100)),
            (rat(2, 5), rat(-1, 5), rat(1, 5), rat(3, 2)),
            (rat(1, 2), rat(1, 3), rat(1, 2), rat(1, 4)),
        ];
        let sign = |r: &Rational| -> i32 {
            if r > &Rational::zero() {
                1
            } else if r < &Rational::zero() {
                -1
            } else {
                0
            }
        };
        for (deg_l, deg_k, q, c) in cases {
            let sd = SlopeData::curve_point(deg_l, deg_k, q).unwrap();
            let mu = sd.mu();
            let iz = slope_ideal(&sd, &c).unwrap();
            let oz = slope_quotient(&sd, &c).unwrap();
            assert_eq!(sign(&(&iz - &mu)), -sign(&(&oz - &mu)));
        }
    }
}
