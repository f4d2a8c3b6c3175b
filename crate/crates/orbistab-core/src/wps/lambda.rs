//! The implicit Fubini–Study fibre norm: the unique positive root `λ(v)` of
//! `Σ_i (k+i) λ^{2(k+i)} |v_{k+i}|² = c` with `c = Σ_i (k+i) c_i dim V^{k+i}`.
//!
//! The equation spans exponents of order `2(k+M)`, so it is solved in
//! `u = 2·log λ` with terms evaluated as `exp(log t_i + d_i u)`; the left
//! side is strictly increasing in `u`, so a safeguarded Newton iteration on
//! a sign-definite bracket always converges.

use alloc::vec::Vec;


use super::graded::{GradedMetric, GradedPoint, GradedVectorSpace, WpsError};
use crate::arith::WeightSequence;

/// Relative residual tolerance of the λ-solver: `|g(u)| ≤ LAMBDA_REL_TOL·c`.
pub const LAMBDA_REL_TOL: f64 = 1e-13;

/// `c = Σ_i (k+i)·c_i·dim V^{k+i}`.
pub fn weighted_constant(space: &GradedVectorSpace, w: &WeightSequence) -> f64 {
    assert_eq!(space.pieces(), w.len(), "weights must match graded pieces");
    space
        .dims()
        .iter()
        .enumerate()
        .map(|(i, &d)| space.degree(i) as f64 * crate::arith::weights::rational_to_f64(w.weight(i)) * d as f64)
        .sum()
}

/// Solves the defining equation from the squared norms `a_i = |v_{k+i}|²`;
/// returns `u = 2 ln λ`.
pub(crate) fn lambda_log_from_norms(
    degrees: &[f64],
    norms_sq: &[f64],
    c: f64,
) -> Result<f64, WpsError> {
    // Terms t_i e^{d_i u} with t_i = d_i a_i; kept in log form.
    let mut log_t = Vec::with_capacity(norms_sq.len());
    let mut ds = Vec::with_capacity(norms_sq.len());
    for (&d, &a) in degrees.iter().zip(norms_sq) {
        if !(a.is_finite() && d > 0.0) {
            if !a.is_finite() {
                return Err(WpsError::NonFinite);
            }
            continue;
        }
        if a > 0.0 {
            log_t.push(d.ln() + a.ln());
            ds.push(d);
        }
    }
    if ds.is_empty() {
        return Err(WpsError::ZeroVector);
    }
    let log_c = c.ln();
    // Upper bracket: the smallest single-term root; there g ≥ 0.
    let mut u_hi = f64::INFINITY;
    let mut d_min = f64::INFINITY;
    for (lt, &d) in log_t.iter().zip(&ds) {
        u_hi = u_hi.min((log_c - lt) / d);
        d_min = d_min.min(d);
    }
    let n = ds.len() as f64;
    let mut u_lo = u_hi - n.ln().max(f64::EPSILON) / d_min - 1e-3;

    let eval = |u: f64| -> (f64, f64) {
        let mut g = -c;
        let mut dg = 0.0;
        for (lt, &d) in log_t.iter().zip(&ds) {
            let term = (lt + d * u).exp();
            g += term;
            dg += d * term;
        }
        (g, dg)
    };

    debug_assert!(eval(u_hi).0 >= -LAMBDA_REL_TOL * c);
    let mut u = 0.5 * (u_lo + u_hi);
    let mut best_g = f64::INFINITY;
    for _ in 0..200 {
        let (g, dg) = eval(u);
        let ga = g.abs();
        // Polish to rounding noise; once progress stalls inside the
        // tolerance band, accept.
        if ga <= 4.0 * f64::EPSILON * c || (ga >= best_g && ga <= LAMBDA_REL_TOL * c) {
            return Ok(u);
        }
        best_g = best_g.min(ga);
        if g > 0.0 {
            u_hi = u;
        } else {
            u_lo = u;
        }
        let newton = u - g / dg;
        u = if newton.is_finite() && newton > u_lo && newton < u_hi {
            newton
        } else {
            0.5 * (u_lo + u_hi)
        };
    }
    let (g, _) = eval(u);
    if g.abs() <= LAMBDA_REL_TOL * c {
        Ok(u)
    } else {
        Err(WpsError::NonFinite)
    }
}

/// The unique positive solution `λ(v)` of the defining equation.
pub fn lambda_solve(
    v: &GradedPoint,
    metric: &GradedMetric,
    w: &WeightSequence,
    space: &GradedVectorSpace,
) -> Result<f64, WpsError> {
    if v.is_zero() {
        return Err(WpsError::ZeroVector);
    }
    let degrees: Vec<f64> = (0..space.pieces()).map(|i| space.degree(i) as f64).collect();
    let norms = v.norms_sq(metric);
    let c = weighted_constant(space, w);
    let u = lambda_log_from_norms(&degrees, &norms, c)?;
    Ok((0.5 * u).exp())
}

/// Pointwise Fubini–Study data at `[v]`.
#[derive(Debug, Clone)]
pub struct HfsNorms {
    pub lambda: f64,
    /// `|v|_{h_FS} = 1/λ(v)`.
    pub fiber_norm: f64,
    /// Per-degree sums `Σ_α |t^i_α|²_{h_FS} = λ^{2(k+i)}·|v_{k+i}|²` over a
    /// metric-orthonormal basis.
    pub per_degree: Vec<f64>,
    /// `f = Σ_i Σ_α |t^i_α|²_{h_FS}` (the potential correction function).
    pub f: f64,
    /// The degree-weighted sum `Σ_i (k+i)·per_degree[i]`, equal to `c`.
    pub weighted_sum: f64,
}

/// Fibre norm and the pointwise orthonormal section norms at `[v]`.
pub fn hfs_norms(
    v: &GradedPoint,
    metric: &GradedMetric,
    w: &WeightSequence,
    space: &GradedVectorSpace,
) -> Result<HfsNorms, WpsError> {
    if v.is_zero() {
        return Err(WpsError::ZeroVector);
    }
    let degrees: Vec<f64> = (0..space.pieces()).map(|i| space.degree(i) as f64).collect();
    let norms = v.norms_sq(metric);
    let c = weighted_constant(space, w);
    let u = lambda_log_from_norms(&degrees, &norms, c)?;
    let lambda = (0.5 * u).exp();
    let per_degree: Vec<f64> = degrees
        .iter()
        .zip(&norms)
        .map(|(&d, &a)| if a > 0.0 { (d * u + a.ln()).exp() } else { 0.0 })
        .collect();
    let f = per_degree.iter().sum();
    let weighted_sum = degrees.iter().zip(&per_degree).map(|(&d, &p)| d * p).sum();
    Ok(HfsNorms { lambda, fiber_norm: 1.0 / lambda, per_degree, f, weighted_sum })
}
