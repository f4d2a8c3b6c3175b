//! Slope classification of polarised orbifold Riemann surfaces.
//!
//! `(X, L)` is slope semistable iff `2g + Σ(1 − 1/m_i) ≥ 2·max(1 − 1/m_i)`,
//! and fails to be strictly stable exactly in three genus-0 families:
//! one marked point; two marked points of different orders; two marked
//! points of equal order (the polystable boundary).

use alloc::string::ToString;

use super::slope::{curve_slope_data, seshadri_point, slope_ideal, slope_quotient, PointDivisor};
use super::{StabilityError, StabilityVerdict, Status, Witness};
use crate::arith::{rat, rat_int, Rational};
use crate::orbicurve::{OrbiCurve, QDivisor};

/// Classifies `(X, L)` as stable / semistable-boundary / unstable, with a
/// witnessing point divisor when not stable.
pub fn classify_curve(
    curve: &OrbiCurve,
    l: &QDivisor,
) -> Result<StabilityVerdict, StabilityError> {
    let (ample, reason) = curve.is_orbi_ample(l);
    if !ample {
        return Err(StabilityError::NotAmple(reason));
    }
    let two_g = rat_int(2 * curve.genus() as i64);
    let sum: Rational = curve
        .markings()
        .iter()
        .map(|m| rat(1, 1) - rat(1, m.order as i64))
        .sum::<Rational>()
        + &two_g;
    let max_marking = curve.markings().iter().max_by_key(|m| m.order);
    let max_term = max_marking
        .map(|m| rat(1, 1) - rat(1, m.order as i64))
        .unwrap_or_else(|| rat_int(0));
    let bound = rat_int(2) * &max_term;

    let status = if sum < bound {
        Status::Unstable
    } else if sum == bound {
        Status::SemistableBoundary
    } else {
        Status::Stable
    };
    if status == Status::Stable {
        return Ok(StabilityVerdict::stable());
    }

    // Witness: the maximal-order point (a free reduced point when there are
    // no markings), taken at the endpoint c = ε where the slope gap is
    // widest.
    let (label, point, q) = match max_marking {
        Some(m) => (
            m.label.clone(),
            m.coord.clone().expect("genus-0 markings carry coordinates"),
            rat(1, m.order as i64),
        ),
        None => (
            "free point".to_string(),
            crate::orbicurve::Point::zero(),
            rat_int(1),
        ),
    };
    let z = PointDivisor::new(point, q.clone())?;
    let c = seshadri_point(curve, l, &z)?;
    let sd = curve_slope_data(curve, l, &z)?;
    let witness = Witness {
        point: label,
        q,
        c: c.clone(),
        mu_x: sd.mu(),
        mu_c_oz: slope_quotient(&sd, &c)?,
        mu_c_iz: slope_ideal(&sd, &c)?,
    };
    Ok(StabilityVerdict { status, witness: Some(witness) })
}

/// Exhaustive destabiliser search over point divisors `Z = (l/m_i)·p_i`
/// (and reduced free points) with `c` sweeping a dense rational sample of
/// `(0, ε]`. Returns whether any `Z` violates `μ_c(O_Z) ≥ μ(X)` strictly
/// inside the range, or only attains equality at the endpoint.
///
/// This is deliberately independent of [`classify_curve`]'s inequality and
/// is used to cross-check it.
pub fn destabilized_by_point_search(
    curve: &OrbiCurve,
    l: &QDivisor,
    c_samples_per_unit: u32,
) -> Result<(bool, bool), StabilityError> {
    let mut strictly = false;
    let mut boundary = false;
    let mut candidates = alloc::vec::Vec::new();
    for m in curve.markings() {
        let p = m.coord.clone().expect("genus 0");
        for num in 1..=m.order as i64 {
            candidates.push(PointDivisor::new(p.clone(), rat(num, m.order as i64))?);
        }
    }
    // A free reduced point not among the markings.
    let mut free = 2i64;
    let taken: alloc::vec::Vec<_> = curve
        .markings()
        .iter()
        .filter_map(|m| m.coord.clone())
        .collect();
    while taken.contains(&crate::orbicurve::Point::finite(free, 1)) {
        free += 1;
    }
    candidates.push(PointDivisor::new(
        crate::orbicurve::Point::finite(free, 1),
        rat_int(1),
    )?);

    for z in candidates {
        let sd = curve_slope_data(curve, l, &z)?;
        let mu = sd.mu();
        let eps = seshadri_point(curve, l, &z)?;
        let steps = (c_samples_per_unit as i64).max(2);
        for t in 1..=steps {
            let c = &eps * rat(t, steps);
            let oz = slope_quotient(&sd, &c)?;
            if oz < mu {
                strictly = true;
            } else if oz == mu {
                boundary = true;
            }
        }
    }
    Ok((strictly, boundary))
}
