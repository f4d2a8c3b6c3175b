//! Weighted projective spaces as graded vector spaces with metrics.
//!
//! A graded vector space `V = ⊕_i V^{k+i}` with a metric per graded piece
//! carries the scaling action `t ∘ v = ⊕ t^{k+i} v_{k+i}`. The Fubini–Study
//! fibre norm is defined implicitly: `λ(v)` is the unique positive root of
//! `Σ_i (k+i) λ^{2(k+i)} |v_{k+i}|² = c`, and `|v|_{h_FS} = 1/λ(v)`. The
//! moment map, Hamiltonians and equivariant weights all run through `λ`.
//!
//! Matrix-valued quantities (moment map, Hamiltonian generators) are
//! expressed in metric-orthonormal coordinates per graded piece.

mod graded;
mod lambda;
mod moment;

pub use graded::{GradedMetric, GradedPoint, GradedVectorSpace, HamiltonianMatrix, WpsError};
pub use lambda::{hfs_norms, lambda_solve, weighted_constant, HfsNorms, LAMBDA_REL_TOL};
pub use moment::{equivariant_weight, hamiltonian, moment_map, EquivariantWeight};
