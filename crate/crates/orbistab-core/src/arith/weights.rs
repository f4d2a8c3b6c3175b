//! The weight sequence `c_i` attached to an orbifold order: coefficients of
//! `(t^{ord−1} + t^{ord−2} + ... + 1)^{p+1}`, indexed `i = 0..(ord−1)(p+1)`.
//!
//! Weighted sums `Σ_i c_i H(k+i)` against these weights kill periodic
//! corrections in the top four coefficient slots, which is what makes the
//! Futaki invariant well defined from polynomial parts alone.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::quasi::{qp_fit, QuasiPolynomial};
use super::{rat_int, ArithError, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSequence {
    ord: u32,
    p: u32,
    c: Vec<Rational>,
}

impl WeightSequence {
    pub fn ord(&self) -> u32 {
        self.ord
    }

    pub fn exponent(&self) -> u32 {
        self.p
    }

    /// Top index `M = (ord − 1)(p + 1)`; weights are indexed `0..=M`.
    pub fn top_index(&self) -> u32 {
        (self.ord - 1) * (self.p + 1)
    }

    pub fn weights(&self) -> &[Rational] {
        &self.c
    }

    pub fn weight(&self, i: usize) -> &Rational {
        &self.c[i]
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `Σ_i c_i` as f64, for the numerical modules.
    pub fn sum_f64(&self) -> f64 {
        self.c.iter().map(rational_to_f64).sum()
    }

    pub fn weights_f64(&self) -> Vec<f64> {
        self.c.iter().map(rational_to_f64).collect()
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("rational out of f64 range")
}

/// Coefficients of `(t^{ord−1} + ... + 1)^{p+1}`.
pub fn ci_weights(ord: u32, p: u32) -> WeightSequence {
    assert!(ord >= 1 && p >= 1, "ord and p must be at least 1");
    let base = vec![BigInt::from(1); ord as usize];
    let mut acc = vec![BigInt::from(1)];
    for _ in 0..=p {
        let mut next = vec![BigInt::zero(); acc.len() + base.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in base.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    let c = acc.into_iter().map(Rational::from_integer).collect();
    WeightSequence { ord, p, c }
}

/// `Σ_{i ≡ residue mod ord} c_i · i^power`.
///
/// By the choice of weights this is independent of the residue for all
/// `power ≤ p`, the mechanism by which weighted sums ignore periodic terms.
pub fn residue_moment(w: &WeightSequence, power: u32, residue: u32) -> Rational {
    assert!(residue < w.ord);
    let mut acc = Rational::zero();
    for (i, c) in w.c.iter().enumerate() {
        if (i as u32) % w.ord == residue {
            let mut t = c.clone();
            for _ in 0..power {
                t *= rat_int(i as i64);
            }
            acc += t;
        }
    }
    acc
}

/// The exact quasi-polynomial `k ↦ Σ_i c_i·H(k+i)`, or with the optional
/// extra factor, `k ↦ Σ_i c_i·(k+i)·H(k+i)`.
///
/// Requires `H.period` to divide `w.ord`. The result has period `w.ord` and
/// degree `H.degree` (plus one with the extra factor); its periodic part
/// loses the top four coefficient slots, so for `H.degree ≤ 3` inputs it is
/// purely polynomial.
pub fn weighted_shift_sum(
    h: &QuasiPolynomial,
    w: &WeightSequence,
    extra_factor: bool,
) -> Result<QuasiPolynomial, ArithError> {
    if w.ord % h.period() != 0 {
        return Err(ArithError::PeriodMismatch { period: h.period(), ord: w.ord });
    }
    let out_degree = h.degree() + usize::from(extra_factor);
    let out_period = w.ord;
    let needed = (out_degree + 2) as i64 * out_period as i64 + out_period as i64;
    let samples: Vec<(i64, Rational)> = (0..needed)
        .map(|k| {
            let mut acc = Rational::zero();
            for (i, c) in w.c.iter().enumerate() {
                let ki = k + i as i64;
                let mut term = c * h.eval(ki);
                if extra_factor {
                    term *= rat_int(ki);
                }
                acc += term;
            }
            (k, acc)
        })
        .collect();
    qp_fit(&samples, out_degree, out_period)
}

/// Least common multiple of marking orders, as u32.
pub fn lcm_u32(a: u32, b: u32) -> u32 {
    if a == 0 || b == 0 {
        return a.max(b).max(1);
    }
    (a as u64).lcm(&(b as u64)) as u32
}
