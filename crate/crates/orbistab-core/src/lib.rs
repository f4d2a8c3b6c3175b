//! Exact stability data for polarised orbifold Riemann surfaces, and a
//! numerical engine for weighted projective embeddings and balanced metrics.
//!
//! The crate is split along the natural seams of the problem:
//!
//! * [`arith`] — exact rational arithmetic, quasi-polynomials with periodic
//!   corrections, and the weight sequence used for weighted Bergman kernels;
//! * [`orbicurve`] — orbifold Riemann surfaces, Q-divisors and their exact
//!   section spaces (genus 0);
//! * [`stability`] — slopes, Seshadri constants, Futaki invariants, the
//!   brute-force weight oracle and the example checkers;
//! * [`wps`] — metrics on graded vector spaces: the implicit Fubini–Study
//!   fibre norm, moment maps and Hamiltonians;
//! * [`balanced`] — quadrature, Hilb/FS maps, weighted Bergman kernels and
//!   the T-iteration towards balanced metrics.
//!
//! Everything in [`arith`], [`orbicurve`] and [`stability`] is exact; the
//! numerical modules use `f64` with log-space safeguards where section norms
//! span many orders of magnitude.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod balanced;
pub mod linalg;
pub mod orbicurve;
pub mod stability;
pub mod wps;

pub use arith::{Rational, QuasiPolynomial, QuasiPolynomial2, WeightSequence};
pub use orbicurve::{OrbiCurve, Point, QDivisor, SectionBasis};

