//! Graded vector spaces, metrics, points and Hamiltonian generators.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::linalg::{CholeskyFactor, CMatrix, LinalgError};

/// Dimensions of the graded pieces `V^{k+i}`, `i = 0..=M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVectorSpace {
    base_degree: i64,
    dims: Vec<usize>,
}

impl GradedVectorSpace {
    pub fn new(base_degree: i64, dims: Vec<usize>) -> Self {
        assert!(
            dims.iter().any(|&d| d > 0),
            "at least one graded piece must be nonzero"
        );
        GradedVectorSpace { base_degree, dims }
    }

    pub fn base_degree(&self) -> i64 {
        self.base_degree
    }

    /// Degree of the `i`-th piece: `k + i`.
    pub fn degree(&self, i: usize) -> i64 {
        self.base_degree + i as i64
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn pieces(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// A positive-definite Hermitian inner product per graded piece.
#[derive(Debug, Clone)]
pub struct GradedMetric {
    blocks: Vec<CMatrix>,
}

impl GradedMetric {
    pub fn new(blocks: Vec<CMatrix>) -> Self {
        GradedMetric { blocks }
    }

    pub fn identity(space: &GradedVectorSpace) -> Self {
        GradedMetric {
            blocks: space.dims().iter().map(|&d| CMatrix::identity(d)).collect(),
        }
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &CMatrix {
        &self.blocks[i]
    }

    /// Cholesky factors of every block; fails on non-positive-definite input.
    pub fn cholesky(&self) -> Result<Vec<CholeskyFactor>, WpsError> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                b.cholesky().map_err(|e| WpsError::BadMetric { block: i, source: e })
            })
            .collect()
    }

    /// Frobenius distance to another metric, summed over blocks.
    pub fn distance(&self, other: &GradedMetric) -> f64 {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| {
                let d = a.sub(b).frobenius_norm();
                d * d
            })
            .sum::<f64>()
            .sqrt()
    }
}

/// A point of `V`: one complex coefficient vector per graded piece (not all
/// zero when used as a projective point).
#[derive(Debug, Clone, PartialEq)]
pub struct GradedPoint {
    components: Vec<Vec<Complex64>>,
}

impl GradedPoint {
    pub fn new(components: Vec<Vec<Complex64>>) -> Self {
        GradedPoint { components }
    }

    pub fn components(&self) -> &[Vec<Complex64>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &[Complex64] {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.iter().all(|z| z.norm_sqr() == 0.0))
    }

    /// The graded scaling action `t ∘ v = ⊕ t^{k+i} v_{k+i}` for real `t > 0`.
    pub fn graded_scale(&self, space: &GradedVectorSpace, t: f64) -> GradedPoint {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let f = t.powi(space.degree(i) as i32);
                c.iter().map(|z| z * f).collect()
            })
            .collect();
        GradedPoint { components }
    }

    /// Squared metric norms per graded piece.
    pub fn norms_sq(&self, metric: &GradedMetric) -> Vec<f64> {
        self.components
            .iter()
            .zip(metric.blocks())
            .map(|(v, g)| if v.is_empty() { 0.0 } else { g.quadratic_form(v) })
            .collect()
    }
}

/// A graded Hermitian matrix `A = ⊕_i A^{k+i}` (in metric-orthonormal
/// coordinates), the infinitesimal generator of a one-parameter subgroup.
#[derive(Debug, Clone)]
pub struct HamiltonianMatrix {
    blocks: Vec<CMatrix>,
}

impl HamiltonianMatrix {
    pub fn new(blocks: Vec<CMatrix>) -> Self {
        HamiltonianMatrix { blocks }
    }

    pub fn blocks(&self) -> &[CMatrix] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &CMatrix {
        &self.blocks[i]
    }

    pub fn scale(&self, s: f64) -> HamiltonianMatrix {
        HamiltonianMatrix { blocks: self.blocks.iter().map(|b| b.scale(s)).collect() }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| {
                let n = b.frobenius_norm();
                n * n
            })
            .sum::<f64>()
            .sqrt()
    }
}

/// Errors from the weighted-projective kernels.
#[derive(Debug, Clone, PartialEq)]
pub enum WpsError {
    /// The zero vector has no projective class.
    ZeroVector,
    /// A metric block failed its Cholesky factorisation.
    BadMetric { block: usize, source: LinalgError },
    /// Dimension mismatch between point/metric/weights.
    Mismatch,
    /// The λ bracketing failed (non-finite data).
    NonFinite,
}

impl fmt::Display for WpsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WpsError::ZeroVector => write!(f, "zero vector has no projective class"),
            WpsError::BadMetric { block, source } => {
                write!(f, "metric block {block} not positive definite: {source}")
            }
            WpsError::Mismatch => write!(f, "graded dimension mismatch"),
            WpsError::NonFinite => write!(f, "non-finite data in lambda solve"),
        }
    }
}

impl core::error::Error for WpsError {}
