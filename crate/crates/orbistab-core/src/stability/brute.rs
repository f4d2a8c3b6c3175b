//! Brute-force weight enumeration for deformation to the normal cone on a
//! genus-0 curve: the weight-space decomposition of `H⁰` of the central
//! fibre, computed by counting vanishing orders of explicit sections at `Z`
//! in the orbifold chart.
//!
//! With `N_j = h⁰(L^k ⊗ I_Z^j)` the total weight (in the normalisation of
//! [`super::futaki_from_qp`]) is
//! `w(k) = ck·N₀ − Σ_{j=1}^{ck} N_j = Σ_s (ck − min(mult_Z(s), ck))`,
//! a quasi-polynomial of degree `n + 1 = 2` and period `ord(X)`.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use super::futaki::{futaki_from_qp, TestConfigData};
use super::slope::PointDivisor;
use super::StabilityError;
use crate::arith::{qp_fit, rat_int, Rational};
use crate::orbicurve::{SectionBasis, OrbiCurve, QDivisor};

/// One brute-force sample: the total weight and section count at level `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteForceWeights {
    pub k: i64,
    pub total_weight: Rational,
    pub h0: u64,
}

/// `Z`-multiplicity of each section of `L^k`: the largest `j` with the
/// section in `I_Z^j`, i.e. `⌊ord_chart / l⌋` for `Z = (l/m)·p`.
fn multiplicities(
    curve: &OrbiCurve,
    l: &QDivisor,
    z: &PointDivisor,
    k: i64,
) -> Result<Vec<i64>, StabilityError> {
    let m = curve.order_at(&z.point) as i64;
    let lz = (&z.q * rat_int(m)).to_integer().to_i64().ok_or_else(|| {
        StabilityError::BadPointDivisor("q out of range".to_string())
    })?;
    if lz < 1 || !(&z.q * rat_int(m)).is_integer() {
        return Err(StabilityError::BadPointDivisor(
            "q·ord(p) must be a positive integer".to_string(),
        ));
    }
    let basis = SectionBasis::build(curve, &l.scale_int(k))?;
    Ok((0..basis.len())
        .map(|i| basis.vanishing_order_chart(curve, i, &z.point).div_euclid(lz))
        .collect())
}

/// Total weight of the induced action on `H⁰` of the central fibre of
/// deformation to the normal cone, for integral `ck`.
pub fn weights_brute_force(
    curve: &OrbiCurve,
    l: &QDivisor,
    z: &PointDivisor,
    c: &Rational,
    k: i64,
) -> Result<BruteForceWeights, StabilityError> {
    let ck = c * rat_int(k);
    if !ck.is_integer() || ck < Rational::zero() {
        return Err(StabilityError::NonIntegralCk);
    }
    let ck = ck.to_integer().to_i64().ok_or(StabilityError::NonIntegralCk)?;
    let mults = multiplicities(curve, l, z, k)?;
    let h0 = mults.len() as u64;
    let total: i64 = mults.iter().map(|&mu| ck - mu.min(ck)).sum();
    Ok(BruteForceWeights { k, total_weight: rat_int(total), h0 })
}

/// The oracle: fits the brute-force weights and section counts into
/// quasi-polynomials over a window of `k` and extracts `F₁`.
///
/// Returns the Futaki invariant along with the fitted test-configuration
/// data, for callers that want to inspect the coefficients.
pub fn oracle_futaki(
    curve: &OrbiCurve,
    l: &QDivisor,
    z: &PointDivisor,
    c: &Rational,
) -> Result<(Rational, TestConfigData), StabilityError> {
    if curve.genus() != 0 {
        return Err(StabilityError::Curve(
            crate::orbicurve::CurveError::GenusOutOfScope { genus: curve.genus() },
        ));
    }
    let ord = curve.ord() as i64;
    // Start high enough that section counts follow the affine formula, then
    // take three samples per residue class for the degree-2 weight fit.
    let deg_l = l.degree();
    let terms = l.terms().len() as i64 + 1;
    let k0 = (rat_int(terms) / &deg_l)
        .ceil()
        .to_integer()
        .to_i64()
        .unwrap()
        .max(1);
    let k_hi = k0 + 4 * ord + 2;
    let mut w_samples = Vec::new();
    let mut h_samples = Vec::new();
    for k in k0..=k_hi {
        let bw = weights_brute_force(curve, l, z, c, k)?;
        w_samples.push((k, bw.total_weight));
        h_samples.push((k, rat_int(bw.h0 as i64)));
    }
    let tc = TestConfigData {
        w: qp_fit(&w_samples, 2, ord as u32)?,
        h: qp_fit(&h_samples, 1, ord as u32)?,
    };
    let f1 = futaki_from_qp(&tc)?;
    Ok((f1, tc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::orbicurve::Point;
    use crate::stability::futaki::futaki_normal_cone;
    use alloc::vec;

    #[test]
    fn teardrop3_small_k_weights() {
        // P(1,3), L = O(1), Z = orbifold point, c = 1: chart orders at k = 3
        // are {0, 3}, so w(3) = (3−0) + (3−3) = 3.
        let c = OrbiCurve::teardrop(3).unwrap();
        let l = QDivisor::point(Point::zero(), rat(1, 3));
        let z = PointDivisor::orbifold_point(&c, Point::zero()).unwrap();
        let bw = weights_brute_force(&c, &l, &z, &rat_int(1), 3).unwrap();
        assert_eq!(bw.h0, 2);
        assert_eq!(bw.total_weight, rat_int(3));
        let bw6 = weights_brute_force(&c, &l, &z, &rat_int(1), 6).unwrap();
        assert_eq!(bw6.total_weight, rat_int(9));
    }

    #[test]
    fn ck_zero_gives_zero_weight() {
        let c = OrbiCurve::teardrop(2).unwrap();
        let l = QDivisor::point(Point::zero(), rat(1, 2));
        let z = PointDivisor::orbifold_point(&c, Point::zero()).unwrap();
        let bw = weights_brute_force(&c, &l, &z, &rat_int(1), 0).unwrap();
        assert_eq!(bw.total_weight, rat_int(0));
    }

    #[test]
    fn classical_line_matches_closed_form() {
        // P¹, O(1), Z reduced point, c = 1: w(k) = Σ_{t=0..k}(k − t) = k(k+1)/2.
        let c = OrbiCurve::projective_line();
        let l = QDivisor::point(Point::Infinity, rat_int(1));
        let z = PointDivisor::new(Point::zero(), rat_int(1)).unwrap();
        for k in 1..12 {
            let bw = weights_brute_force(&c, &l, &z, &rat_int(1), k).unwrap();
            assert_eq!(bw.total_weight, rat_int(k * (k + 1) / 2));
        }
    }

    #[test]
    fn oracle_matches_normal_cone_teardrops() {
        // (m, a, c): P(1,m) with L = O(a) and parameter c ≤ ε = a.
        for (m, a, c_par) in [(2u32, 1i64, 1i64), (3, 1, 1), (5, 1, 1), (2, 3, 2)] {
            let curve = OrbiCurve::teardrop(m).unwrap();
            let l = QDivisor::point(Point::zero(), rat(a, m as i64));
            let z = PointDivisor::orbifold_point(&curve, Point::zero()).unwrap();
            let c = rat_int(c_par);
            let (f_oracle, _) = oracle_futaki(&curve, &l, &z, &c).unwrap();
            let f_formula = futaki_normal_cone(&curve, &l, &z, &c).unwrap();
            assert_eq!(f_oracle, f_formula, "m={m}, a={a}, c={c_par}");
        }
    }

    #[test]
    fn oracle_matches_normal_cone_footballs_and_line() {
        // Football(m,m) at integral c ≤ 2, and the projective line.
        for m in [2u32, 3] {
            let curve = OrbiCurve::football(m, m).unwrap();
            let l = QDivisor::new(vec![
                (Point::zero(), rat(1, m as i64)),
                (Point::Infinity, rat(1, m as i64)),
            ]);
            let z = PointDivisor::orbifold_point(&curve, Point::zero()).unwrap();
            for c in [rat_int(1), rat_int(2)] {
                let (f_oracle, _) = oracle_futaki(&curve, &l, &z, &c).unwrap();
                let f_formula = futaki_normal_cone(&curve, &l, &z, &c).unwrap();
                assert_eq!(f_oracle, f_formula, "m={m}, c={c}");
            }
        }
        let line = OrbiCurve::projective_line();
        let l = QDivisor::point(Point::Infinity, rat_int(2));
        let z = PointDivisor::new(Point::zero(), rat_int(1)).unwrap();
        let (f_oracle, _) = oracle_futaki(&line, &l, &z, &rat_int(1)).unwrap();
        let f_formula = futaki_normal_cone(&line, &l, &z, &rat_int(1)).unwrap();
        assert_eq!(f_oracle, f_formula);
        assert_eq!(f_oracle, rat(1, 8));
    }
}
