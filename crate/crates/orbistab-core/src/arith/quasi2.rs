//! Bivariate quasi-polynomials: `h(k, j) = p(k, j) + ε_p(k, j)` with `p` of
//! bounded total degree and `ε_p` periodic in both variables, one correction
//! per residue pair, summing to zero over a full period in both variables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;



use super::poly::{solve_exact, RatPoly2};
use super::{rat_int, ArithError, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial2 {
    total_degree: u32,
    period: u32,
    poly: RatPoly2,
    /// Correction for residue pair `(k mod period, j mod period)` at index
    /// `(k mod period) * period + (j mod period)`.
    periodic: Vec<RatPoly2>,
}

impl QuasiPolynomial2 {
    pub fn total_degree(&self) -> u32 {
        self.total_degree
    }

    pub fn period(&self) -> u32 {
        self.period
    }

    pub fn poly(&self) -> &RatPoly2 {
        &self.poly
    }

    pub fn periodic_part(&self, ku: u32, jv: u32) -> &RatPoly2 {
        &self.periodic[(ku * self.period + jv) as usize]
    }

    pub fn eval(&self, k: i64, j: i64) -> Rational {
        let ku = k.rem_euclid(self.period as i64) as u32;
        let jv = j.rem_euclid(self.period as i64) as u32;
        let (k, j) = (rat_int(k), rat_int(j));
        self.poly.eval(&k, &j) + self.periodic_part(ku, jv).eval(&k, &j)
    }

    /// Double sum of every periodic coefficient over one full period in both
    /// variables is zero.
    pub fn average_zero(&self) -> bool {
        let mut sum = RatPoly2::zero();
        for p in &self.periodic {
            sum = sum.add(p);
        }
        sum.is_zero()
    }
}

fn monomials(total_degree: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 0..=total_degree {
        for b in 0..=(total_degree - a) {
            out.push((a, b));
        }
    }
    out
}

/// Bivariate analogue of [`super::qp_fit`]: fits the unique
/// [`QuasiPolynomial2`] of the stated shape through the samples.
pub fn qp2_fit(
    samples: &[((i64, i64), Rational)],
    total_degree: u32,
    period: u32,
) -> Result<QuasiPolynomial2, ArithError> {
    assert!(period >= 1);
    let monos = monomials(total_degree);
    let mut classes: BTreeMap<(u32, u32), Vec<((i64, i64), Rational)>> = BTreeMap::new();
    for ((k, j), v) in samples {
        let key = (
            k.rem_euclid(period as i64) as u32,
            j.rem_euclid(period as i64) as u32,
        );
        classes.entry(key).or_default().push(((*k, *j), v.clone()));
    }

    let mut interpolants = Vec::with_capacity((period * period) as usize);
    for ku in 0..period {
        for jv in 0..period {
            let Some(pts) = classes.get(&(ku, jv)) else {
                return Err(ArithError::InsufficientSamples {
                    residue: ku * period + jv,
                    have: 0,
                    need: monos.len(),
                });
            };
            let a: Vec<Vec<Rational>> = pts
                .iter()
                .map(|((k, j), _)| {
                    let (k, j) = (rat_int(*k), rat_int(*j));
                    monos
                        .iter()
                        .map(|(x, y)| {
                            let mut t = Rational::new(1.into(), 1.into());
                            for _ in 0..*x {
                                t *= &k;
                            }
                            for _ in 0..*y {
                                t *= &j;
                            }
                            t
                        })
                        .collect()
                })
                .collect();
            let b: Vec<Rational> = pts.iter().map(|(_, v)| v.clone()).collect();
            let sol = solve_exact(&a, &b, monos.len()).map_err(|e| match e {
                ArithError::SingularSystem => ArithError::InsufficientSamples {
                    residue: ku * period + jv,
                    have: pts.len(),
                    need: monos.len(),
                },
                other => other,
            })?;
            let terms: Vec<(u32, u32, Rational)> = monos
                .iter()
                .zip(sol)
                .map(|(&(a, b), c)| (a, b, c))
                .collect();
            interpolants.push(RatPoly2::from_terms(terms));
        }
    }

    let mut avg = RatPoly2::zero();
    for p in &interpolants {
        avg = avg.add(p);
    }
    avg = avg.scale(&Rational::new(1.into(), (period * period).into()));

    let periodic: Vec<RatPoly2> = interpolants.iter().map(|p| p.sub(&avg)).collect();
    for p in &periodic {
        if let Some(d) = p.total_degree() {
            if total_degree == 0 || d > total_degree - 1 {
                return Err(ArithError::InconsistentSamples);
            }
        }
    }
    let qp = QuasiPolynomial2 { total_degree, period, poly: avg, periodic };
    debug_assert!(qp.average_zero());
    Ok(qp)
}
