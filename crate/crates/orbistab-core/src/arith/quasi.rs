//! Quasi-polynomials in one variable: a polynomial part plus a periodic
//! correction of average zero, one correction polynomial per residue class.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;



use super::poly::RatPoly;
use super::{rat_int, ArithError, Rational};

/// `eval(k) = poly(k) + periodic[k mod period](k)`.
///
/// Invariants: `periodic.len() == period`; each correction has degree
/// `≤ degree − 1`; for every coefficient slot the corrections sum to zero
/// over the residue classes (the polynomial part is the per-residue average,
/// which makes the decomposition unique).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    degree: usize,
    period: u32,
    poly: RatPoly,
    periodic: Vec<RatPoly>,
}

impl QuasiPolynomial {
    /// A plain polynomial viewed as a quasi-polynomial of period `period`.
    pub fn from_poly(poly: RatPoly, period: u32) -> Self {
        let degree = poly.degree().unwrap_or(0);
        let periodic = alloc::vec![RatPoly::zero(); period as usize];
        QuasiPolynomial { degree, period, poly, periodic }
    }

    pub fn from_parts(
        degree: usize,
        period: u32,
        poly: RatPoly,
        periodic: Vec<RatPoly>,
    ) -> Result<Self, ArithError> {
        let qp = QuasiPolynomial { degree, period, poly, periodic };
        if qp.periodic.len() != period as usize || !qp.average_zero() {
            return Err(ArithError::InconsistentSamples);
        }
        Ok(qp)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn period(&self) -> u32 {
        self.period
    }

    pub fn poly(&self) -> &RatPoly {
        &self.poly
    }

    /// Coefficient of `k^i` in the polynomial part.
    pub fn poly_coeff(&self, i: usize) -> Rational {
        self.poly.coeff(i)
    }

    pub fn periodic_parts(&self) -> &[RatPoly] {
        &self.periodic
    }

    pub fn eval(&self, k: i64) -> Rational {
        let r = k.rem_euclid(self.period as i64) as usize;
        self.poly.eval_i64(k) + self.periodic[r].eval_i64(k)
    }

    /// Whether every coefficient slot of the periodic part sums to zero over
    /// a full period.
    pub fn average_zero(&self) -> bool {
        let mut sum = RatPoly::zero();
        for p in &self.periodic {
            sum = sum.add(p);
        }
        sum.is_zero()
    }

    /// The same quasi-polynomial with an extra average-zero periodic
    /// perturbation added (used by invariance tests).
    pub fn with_periodic_perturbation(&self, delta: &[RatPoly]) -> Result<Self, ArithError> {
        if delta.len() != self.period as usize {
            return Err(ArithError::InconsistentSamples);
        }
        let periodic: Vec<RatPoly> = self
            .periodic
            .iter()
            .zip(delta)
            .map(|(p, d)| p.add(d))
            .collect();
        QuasiPolynomial::from_parts(self.degree, self.period, self.poly.clone(), periodic)
    }
}

/// Fits the unique quasi-polynomial of the given degree and period through
/// exact samples `(k, value)`.
///
/// Each residue class mod `period` needs at least `degree + 1` samples with
/// distinct `k`; extra samples must be consistent. The polynomial part is the
/// average of the per-residue interpolants and the periodic part the
/// residual, which must have degree `≤ degree − 1`.
pub fn qp_fit(
    samples: &[(i64, Rational)],
    degree: usize,
    period: u32,
) -> Result<QuasiPolynomial, ArithError> {
    assert!(period >= 1, "period must be positive");
    let mut by_residue: BTreeMap<u32, BTreeMap<i64, Rational>> = BTreeMap::new();
    for (k, v) in samples {
        let r = k.rem_euclid(period as i64) as u32;
        if let Some(old) = by_residue.entry(r).or_default().insert(*k, v.clone()) {
            if old != *v {
                return Err(ArithError::InconsistentSamples);
            }
        }
    }

    let mut interpolants = Vec::with_capacity(period as usize);
    for r in 0..period {
        let pts = by_residue.get(&r).map(|m| m.len()).unwrap_or(0);
        if pts < degree + 1 {
            return Err(ArithError::InsufficientSamples {
                residue: r,
                have: pts,
                need: degree + 1,
            });
        }
        let class = &by_residue[&r];
        let base: Vec<(Rational, Rational)> = class
            .iter()
            .take(degree + 1)
            .map(|(k, v)| (rat_int(*k), v.clone()))
            .collect();
        let p = RatPoly::interpolate(&base);
        // Remaining samples in the class must lie on the interpolant.
        for (k, v) in class.iter().skip(degree + 1) {
            if p.eval_i64(*k) != *v {
                return Err(ArithError::InconsistentSamples);
            }
        }
        interpolants.push(p);
    }

    let mut avg = RatPoly::zero();
    for p in &interpolants {
        avg = avg.add(p);
    }
    avg = avg.scale(&Rational::new(1.into(), period.into()));

    let periodic: Vec<RatPoly> = interpolants.iter().map(|p| p.sub(&avg)).collect();
    // A valid quasi-polynomial has periodic corrections of strictly lower
    // degree; per-residue leading terms that disagree are not representable.
    for p in &periodic {
        if let Some(d) = p.degree() {
            if degree == 0 || d > degree - 1 {
                return Err(ArithError::InconsistentSamples);
            }
        }
    }
    QuasiPolynomial::from_parts(degree, period, avg, periodic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use alloc::vec;

    fn floor_div(k: i64, m: i64) -> i64 {
        k.div_euclid(m)
    }

    #[test]
    fn fit_floor_function() {
        // f(k) = ⌊k/2⌋ + 1 = k/2 + 3/4 + (1/4 even, -1/4 odd)
        let samples: Vec<_> = (0..10).map(|k| (k, rat_int(floor_div(k, 2) + 1))).collect();
        let qp = qp_fit(&samples, 1, 2).unwrap();
        assert_eq!(qp.poly_coeff(1), rat(1, 2));
        assert_eq!(qp.poly_coeff(0), rat(3, 4));
        assert_eq!(qp.periodic_parts()[0], RatPoly::constant(rat(1, 4)));
        assert_eq!(qp.periodic_parts()[1], RatPoly::constant(rat(-1, 4)));
        for k in -6..20 {
            assert_eq!(qp.eval(k), rat_int(floor_div(k, 2) + 1));
        }
    }

    #[test]
    fn fit_exact_polynomial_has_zero_periodic_part() {
        let samples: Vec<_> = (0..12).map(|k| (k, rat_int(k * k))).collect();
        let qp = qp_fit(&samples, 2, 3).unwrap();
        assert!(qp.periodic_parts().iter().all(|p| p.is_zero()));
        assert_eq!(qp.poly_coeff(2), rat_int(1));
    }

    #[test]
    fn fit_requires_enough_samples_per_class() {
        let samples = vec![(0, rat_int(1)), (2, rat_int(2)), (4, rat_int(3)), (1, rat_int(1))];
        let err = qp_fit(&samples, 1, 2).unwrap_err();
        assert!(matches!(err, ArithError::InsufficientSamples { residue: 1, .. }));
    }

    #[test]
    fn fit_rejects_mismatched_leading_terms() {
        // k² on evens, -k² on odds cannot be a degree-2, period-2
        // quasi-polynomial (periodic part would need degree 2).
        let samples: Vec<_> = (0..10)
            .map(|k| (k, if k % 2 == 0 { rat_int(k * k) } else { rat_int(-k * k) }))
            .collect();
        assert_eq!(qp_fit(&samples, 2, 2), Err(ArithError::InconsistentSamples));
    }

    #[test]
    fn average_zero_invariant() {
        let samples: Vec<_> = (0..15).map(|k| (k, rat_int(floor_div(k, 3) * 2 + 1))).collect();
        let qp = qp_fit(&samples, 1, 3).unwrap();
        assert!(qp.average_zero());
    }
}
