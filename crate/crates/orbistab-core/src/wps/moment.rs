//! Moment maps and Hamiltonians on weighted projective space, and exact
//! equivariant weight sums.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use super::graded::{GradedMetric, GradedPoint, GradedVectorSpace, HamiltonianMatrix, WpsError};
use super::lambda::{hfs_norms, weighted_constant};
use crate::arith::WeightSequence;
use crate::linalg::CMatrix;

/// Metric-orthonormal coordinates of `v`: with the Gram block `G = LL*`,
/// a coefficient vector `x` becomes `w = L*x`, so `|v|² = w*w`.
pub(crate) fn orthonormal_coords(
    v: &GradedPoint,
    metric: &GradedMetric,
) -> Result<Vec<Vec<Complex64>>, WpsError> {
    let factors = metric.cholesky()?;
    Ok(v.components()
        .iter()
        .zip(&factors)
        .map(|(x, f)| {
            let l = f.lower();
            let n = l.size();
            let mut w = alloc::vec![Complex64::new(0.0, 0.0); n];
            for j in 0..n {
                // (L* x)_j = Σ_i conj(L_{ij}) x_i
                for i in j..n {
                    w[j] += l[(i, j)].conj() * x[i];
                }
            }
            w
        })
        .collect())
}

/// The moment map of `[v]` for the product of unitary groups, per block in
/// metric-orthonormal coordinates:
/// `m([v])^i = ½(λ^{2(k+i)}·w_i w_i* − c_i·Id)`.
pub fn moment_map(
    v: &GradedPoint,
    metric: &GradedMetric,
    w: &WeightSequence,
    space: &GradedVectorSpace,
) -> Result<Vec<CMatrix>, WpsError> {
    let h = hfs_norms(v, metric, w, space)?;
    let coords = orthonormal_coords(v, metric)?;
    let mut blocks = Vec::with_capacity(space.pieces());
    for i in 0..space.pieces() {
        let d = space.dims()[i];
        let ci = crate::arith::weights::rational_to_f64(w.weight(i));
        let mut block = CMatrix::zeros(d);
        let scale = pow_lambda_sq(h.lambda, space.degree(i));
        for a in 0..d {
            for b in 0..d {
                block[(a, b)] = coords[i][a] * coords[i][b].conj() * (0.5 * scale);
            }
            block[(a, a)] -= Complex64::new(0.5 * ci, 0.0);
        }
        blocks.push(block);
    }
    Ok(blocks)
}

fn pow_lambda_sq(lambda: f64, degree: i64) -> f64 {
    (2.0 * (degree as f64) * lambda.ln()).exp()
}

/// The Hamiltonian of the one-parameter subgroup generated by `A`:
/// `H_A([v]) = (1/c) Σ_i λ^{2(k+i)} ⟨A^{k+i} w_i, w_i⟩` in orthonormal
/// coordinates. Relation to the moment map:
/// `c·H_A = 2·tr(m A) + Σ_i c_i·tr A^{k+i}`.
pub fn hamiltonian(
    v: &GradedPoint,
    a: &HamiltonianMatrix,
    metric: &GradedMetric,
    w: &WeightSequence,
    space: &GradedVectorSpace,
) -> Result<f64, WpsError> {
    let h = hfs_norms(v, metric, w, space)?;
    let coords = orthonormal_coords(v, metric)?;
    let c = weighted_constant(space, w);
    let mut acc = 0.0;
    for i in 0..space.pieces() {
        if space.dims()[i] == 0 {
            continue;
        }
        let scale = pow_lambda_sq(h.lambda, space.degree(i));
        acc += scale * a.block(i).quadratic_form(&coords[i]);
    }
    Ok(acc / c)
}

/// Exact total weight and trace of the squared action from integer
/// eigenvalue lists, one list per graded piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantWeight {
    pub total: BigInt,
    pub trace_square: BigInt,
}

pub fn equivariant_weight(eigenvalues: &[Vec<i64>]) -> EquivariantWeight {
    let mut total = BigInt::zero();
    let mut trace_square = BigInt::zero();
    for block in eigenvalues {
        for &e in block {
            total += BigInt::from(e);
            trace_square += BigInt::from(e) * BigInt::from(e);
        }
    }
    EquivariantWeight { total, trace_square }
}
