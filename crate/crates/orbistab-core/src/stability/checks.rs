//! Closed-form stability checkers: the index obstruction for Fano orbifolds,
//! weighted projective spaces, hyperplane-marked projective spaces, and
//! projectivised orbifold bundles over a curve.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{StabilityError, StabilityVerdict, Status, Witness};
use crate::arith::{rat, rat_int, Rational};

/// Index-obstruction report for `K_orb^{−k} ≅ O(krD)` with `r ∈ Q₊`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub verdict: StabilityVerdict,
    pub mu_x: Rational,
    pub mu_r_od: Rational,
}

/// Index obstruction: `(X, K_orb^{-1})` with `K_orb^{-k} ≅ O(krD)` is slope
/// unstable when `r > n + 1`.
///
/// `μ(X) = n/2` and `μ_r(O_D) = (n+1)((n−1)r+1)/(2nr)`; the verdict is
/// `Unstable` for `r > n+1`, the boundary at `r = n+1` (where
/// `μ_r(O_D) = n/2` exactly), and `Stable` — meaning *not obstructed by this
/// test* — for `r < n+1`.
pub fn index_check(n: u32, k: u32, r: &Rational) -> Result<IndexReport, StabilityError> {
    let _ = k; // part of the isomorphism data; the verdict depends on r only
    if r <= &Rational::zero() {
        return Err(StabilityError::NonPositiveIndex);
    }
    let n_r = rat_int(n as i64);
    let mu_x = &n_r / rat_int(2);
    let mu_r = (&n_r + rat_int(1)) * ((&n_r - rat_int(1)) * r + rat_int(1))
        / (rat_int(2) * &n_r * r);
    let threshold = &n_r + rat_int(1);
    let status = if r > &threshold {
        Status::Unstable
    } else if r == &threshold {
        Status::SemistableBoundary
    } else {
        Status::Stable
    };
    let witness = (status != Status::Stable).then(|| Witness {
        point: "D".to_string(),
        q: rat_int(1),
        c: r.clone(),
        mu_x: mu_x.clone(),
        mu_c_oz: mu_r.clone(),
        mu_c_iz: rat_int(2) * &mu_x - &mu_r,
    });
    Ok(IndexReport {
        verdict: StabilityVerdict { status, witness },
        mu_x,
        mu_r_od: mu_r,
    })
}

/// Weighted projective space `P(λ₀,…,λ_n)`: unstable whenever the weights
/// are not all equal (then `Σλ_i > (n+1)·min λ_i` and the index obstruction
/// applies to the minimal-weight coordinate divisor).
pub fn wps_check(weights: &[u64]) -> Result<StabilityVerdict, StabilityError> {
    if weights.is_empty() {
        return Err(StabilityError::EmptyWeights);
    }
    let n = weights.len() as u32 - 1;
    let min = *weights.iter().min().expect("nonempty");
    let sum: u64 = weights.iter().sum();
    let r = rat(sum as i64, min as i64);
    let all_equal = weights.iter().all(|&w| w == min);
    let mut report = index_check(n.max(1), 1, &r)?;
    if n == 0 {
        // A single weight is a point; treat as unobstructed.
        return Ok(StabilityVerdict::stable());
    }
    if all_equal {
        report.verdict.status = Status::SemistableBoundary;
    } else {
        debug_assert_eq!(report.verdict.status, Status::Unstable);
    }
    if let Some(w) = report.verdict.witness.as_mut() {
        w.point = format!("{{x_min = 0}} (weight {min})");
    }
    Ok(report.verdict)
}

/// Hyperplane-marked projective space `(Pⁿ, Σ(1−1/m_i)H_i)` with `n+2`
/// hyperplanes in general position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PnHyperplaneReport {
    /// `Σ 1/m_i > 1`.
    pub fano: bool,
    /// Necessary for semistability: `Σ 1/m_i ≤ 1 + (n+1)·min(1/m_i)`.
    pub semistable_necessary: bool,
    pub sum_reciprocals: Rational,
    pub bound: Rational,
}

pub fn pn_hyperplane_check(n: u32, orders: &[u32]) -> Result<PnHyperplaneReport, StabilityError> {
    if orders.len() != n as usize + 2 {
        return Err(StabilityError::WrongLength {
            expected: n as usize + 2,
            got: orders.len(),
        });
    }
    if orders.iter().any(|&m| m < 2) {
        return Err(StabilityError::BadPointDivisor("orders must be ≥ 2".to_string()));
    }
    let sum: Rational = orders.iter().map(|&m| rat(1, m as i64)).sum();
    let min_recip = orders
        .iter()
        .map(|&m| rat(1, m as i64))
        .min()
        .expect("nonempty");
    let bound = rat_int(1) + rat_int(n as i64 + 1) * min_recip;
    Ok(PnHyperplaneReport {
        fano: sum > rat_int(1),
        semistable_necessary: sum <= bound,
        sum_reciprocals: sum,
        bound,
    })
}

/// Parabolic point data: stabiliser order and the flag steps `(m_{x,j}, p_j)`
/// (dimension jumps and weights `p_j < ord`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicPoint {
    pub ord: u32,
    pub flags: Vec<(u32, u32)>,
}

/// Parabolic degree `pardeg E′ = deg E′ + Σ_{x,j} m_{x,j}·p_j/ord(x)`.
pub fn pardeg(deg: &Rational, points: &[ParabolicPoint]) -> Rational {
    let mut out = deg.clone();
    for pt in points {
        for (mult, weight) in &pt.flags {
            out += rat((*mult as i64) * (*weight as i64), pt.ord as i64);
        }
    }
    out
}

/// Ruled orbifold surface `P(E) → Σ` polarised by `O(1) ⊗ π*L^m`: the sign of
/// `μ₁(O_{P(F)}) − μ(P(E))` equals `sign(μ_E − μ_F)` in the adiabatic regime
/// `rm + (r−1)μ(Σ) − rμ_E > 0`. Negative sign means `P(F)` destabilises.
pub fn parabolic_ruled_check(
    mu_e: &Rational,
    mu_f: &Rational,
    rank: u32,
    m: &Rational,
    mu_sigma: &Rational,
) -> Result<i32, StabilityError> {
    let r = rat_int(rank as i64);
    let adiabatic = &r * m + (&r - rat_int(1)) * mu_sigma - &r * mu_e;
    if adiabatic <= Rational::zero() {
        return Err(StabilityError::NonAdiabatic);
    }
    let diff = mu_e - mu_f;
    Ok(if diff > Rational::zero() {
        1
    } else if diff < Rational::zero() {
        -1
    } else {
        0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_examples() {
        // n = 1, r = 3: μ_r = (2)(0·3+1)/(2·3) = 1/3 < 1/2 → unstable.
        let rep = index_check(1, 1, &rat_int(3)).unwrap();
        assert_eq!(rep.mu_x, rat(1, 2));
        assert_eq!(rep.mu_r_od, rat(1, 3));
        assert_eq!(rep.verdict.status, Status::Unstable);

        // n = 2, P(1,1,2): r = 4 > 3 → unstable.
        let rep = index_check(2, 1, &rat_int(4)).unwrap();
        assert_eq!(rep.verdict.status, Status::Unstable);

        // r = n+1 is the boundary with μ_r = n/2 exactly.
        for n in [1u32, 2, 3, 5] {
            let rep = index_check(n, 1, &rat_int(n as i64 + 1)).unwrap();
            assert_eq!(rep.mu_r_od, rat(n as i64, 2));
            assert_eq!(rep.verdict.status, Status::SemistableBoundary);
        }

        assert!(matches!(
            index_check(2, 1, &rat_int(0)),
            Err(StabilityError::NonPositiveIndex)
        ));
    }

    #[test]
    fn wps_examples() {
        assert_eq!(wps_check(&[1, 2]).unwrap().status, Status::Unstable);
        assert_eq!(wps_check(&[1, 1, 2]).unwrap().status, Status::Unstable);
        assert_eq!(
            wps_check(&[3, 3, 3]).unwrap().status,
            Status::SemistableBoundary
        );
        assert!(matches!(wps_check(&[]), Err(StabilityError::EmptyWeights)));
    }

    #[test]
    fn pn_hyperplane_examples() {
        // n=1, (2,2,2): Σ = 3/2 ≤ 1 + 2·(1/2) = 2.
        let rep = pn_hyperplane_check(1, &[2, 2, 2]).unwrap();
        assert!(rep.fano);
        assert!(rep.semistable_necessary);

        // n=1, (2,3,7): Σ = 41/42 < 1, not Fano.
        let rep = pn_hyperplane_check(1, &[2, 3, 7]).unwrap();
        assert!(!rep.fano);
        assert_eq!(rep.sum_reciprocals, rat(41, 42));

        // n=2, (2,2,2,2): Σ = 2 ≤ 1 + 3/2.
        let rep = pn_hyperplane_check(2, &[2, 2, 2, 2]).unwrap();
        assert!(rep.semistable_necessary);

        assert!(matches!(
            pn_hyperplane_check(2, &[2, 2]),
            Err(StabilityError::WrongLength { .. })
        ));
    }

    #[test]
    fn ruled_surface_examples() {
        // μ_E = 0, μ_F = 1/2, large m: destabilised (negative sign).
        let s = parabolic_ruled_check(&rat_int(0), &rat(1, 2), 2, &rat_int(10), &rat_int(1))
            .unwrap();
        assert_eq!(s, -1);
        // μ_F = μ_E → 0.
        let s = parabolic_ruled_check(&rat(1, 3), &rat(1, 3), 3, &rat_int(10), &rat_int(1))
            .unwrap();
        assert_eq!(s, 0);
        // Non-adiabatic m is rejected.
        assert!(matches!(
            parabolic_ruled_check(&rat_int(5), &rat_int(0), 2, &rat_int(1), &rat_int(0)),
            Err(StabilityError::NonAdiabatic)
        ));
    }

    #[test]
    fn pardeg_example() {
        // deg E′ = 1, one orbifold point of order 2, one flag step of
        // multiplicity 1 and weight 1 → 1 + 1/2 = 3/2.
        let p = ParabolicPoint { ord: 2, flags: alloc::vec![(1, 1)] };
        assert_eq!(pardeg(&rat_int(1), &[p]), rat(3, 2));
    }
}
