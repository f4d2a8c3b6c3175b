//! Dense univariate and bivariate polynomials over [`Rational`], plus an
//! exact linear solver used by the quasi-polynomial fitters.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{ArithError, Rational};

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The coefficient vector carries no trailing zeros (zero polynomial = empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> Rational {
        self.eval(&super::rat_int(x))
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        RatPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        RatPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * super::rat_int(i as i64))
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> RatPoly {
        let mut coeffs = vec![Rational::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / super::rat_int((i + 1) as i64));
        }
        RatPoly::from_coeffs(coeffs)
    }

    /// Exact `∫_0^c p(x) dx`.
    pub fn integrate_to(&self, c: &Rational) -> Rational {
        self.antiderivative().eval(c)
    }

    /// Lagrange interpolation through distinct nodes; exact.
    pub fn interpolate(points: &[(Rational, Rational)]) -> RatPoly {
        let mut acc = RatPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = RatPoly::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&RatPoly::from_coeffs(vec![-xj.clone(), Rational::one()]));
                denom *= xi - xj;
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        acc
    }
}

/// Bivariate polynomial in `(k, j)`; coefficient of `k^a j^b` at `(a, b)`,
/// stored sparsely as a list of `(a, b, coeff)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly2 {
    terms: Vec<(u32, u32, Rational)>,
}

impl RatPoly2 {
    pub fn zero() -> Self {
        RatPoly2 { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<(u32, u32, Rational)>) -> Self {
        let mut out: Vec<(u32, u32, Rational)> = Vec::new();
        for (a, b, c) in terms {
            if c.is_zero() {
                continue;
            }
            match out.iter_mut().find(|(x, y, _)| *x == a && *y == b) {
                Some(t) => t.2 += c,
                None => out.push((a, b, c)),
            }
        }
        out.retain(|(_, _, c)| !c.is_zero());
        out.sort_by_key(|(a, b, _)| (*a, *b));
        RatPoly2 { terms: out }
    }

    pub fn terms(&self) -> &[(u32, u32, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(a, b, _)| a + b).max()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms
            .iter()
            .find(|(x, y, _)| *x == a && *y == b)
            .map(|(_, _, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, k: &Rational, j: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (a, b, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..*a {
                t *= k;
            }
            for _ in 0..*b {
                t *= j;
            }
            acc += t;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly2) -> RatPoly2 {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        RatPoly2::from_terms(terms)
    }

    pub fn sub(&self, other: &RatPoly2) -> RatPoly2 {
        let neg: Vec<_> = other
            .terms
            .iter()
            .map(|(a, b, c)| (*a, *b, -c.clone()))
            .collect();
        self.add(&RatPoly2 { terms: neg })
    }

    pub fn scale(&self, s: &Rational) -> RatPoly2 {
        RatPoly2::from_terms(
            self.terms
                .iter()
                .map(|(a, b, c)| (*a, *b, c * s))
                .collect(),
        )
    }

    /// Restricts `j = x·k`: returns the polynomial in `k` whose coefficients
    /// are polynomials in `x`; entry `d` is the `x`-polynomial multiplying
    /// `k^d`.
    pub fn substitute_j_eq_xk(&self) -> Vec<RatPoly> {
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut out = vec![RatPoly::zero(); deg + 1];
        for (a, b, c) in &self.terms {
            // k^a (xk)^b = x^b k^{a+b}
            let d = (*a + *b) as usize;
            let mut mono = vec![Rational::zero(); *b as usize + 1];
            mono[*b as usize] = c.clone();
            out[d] = out[d].add(&RatPoly::from_coeffs(mono));
        }
        out
    }
}

/// Solves the exact dense system `A x = b` by Gaussian elimination with
/// partial (nonzero) pivoting. `A` is `rows × cols` given row-major; the
/// system may be overdetermined, in which case consistency of the extra rows
/// is required. A unique solution is required (`rank == cols`).
pub fn solve_exact(
    a: &[Vec<Rational>],
    b: &[Rational],
    cols: usize,
) -> Result<Vec<Rational>, ArithError> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            assert_eq!(r.len(), cols);
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].clone();
        for c in col..=cols {
            let v = m[pivot_row][c].clone() / &inv;
            m[pivot_row][c] = v;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let v = m[r][c].clone() - &f * &m[pivot_row][c];
                    m[r][c] = v;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    if pivots.len() < cols {
        return Err(ArithError::SingularSystem);
    }
    // Any remaining nonzero rhs row means the system is inconsistent.
    for r in pivot_row..rows {
        if !m[r][cols].is_zero() {
            return Err(ArithError::InconsistentSamples);
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][cols].clone();
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn interpolation_reproduces_polynomial() {
        let p = RatPoly::from_coeffs(vec![rat(1, 2), rat(-3, 1), rat(5, 7)]);
        let pts: Vec<_> = (0..3).map(|k| (rat(k, 1), p.eval_i64(k))).collect();
        let q = RatPoly::interpolate(&pts);
        assert_eq!(p, q);
    }

    #[test]
    fn integrate_linear() {
        // ∫_0^c (a - qx) dx = ac - qc²/2
        let p = RatPoly::from_coeffs(vec![rat(1, 3), rat(-1, 3)]);
        assert_eq!(p.integrate_to(&rat(1, 1)), rat(1, 6));
    }

    #[test]
    fn exact_solve_overdetermined_consistent() {
        // y = 2 + 3x sampled at four points
        let a: Vec<Vec<Rational>> = (0..4).map(|x| vec![rat(1, 1), rat(x, 1)]).collect();
        let b: Vec<Rational> = (0..4).map(|x| rat(2 + 3 * x, 1)).collect();
        let sol = solve_exact(&a, &b, 2).unwrap();
        assert_eq!(sol, vec![rat(2, 1), rat(3, 1)]);
    }

    #[test]
    fn exact_solve_detects_inconsistency() {
        let a: Vec<Vec<Rational>> = (0..3).map(|x| vec![rat(1, 1), rat(x, 1)]).collect();
        let b = vec![rat(0, 1), rat(1, 1), rat(3, 1)];
        assert_eq!(solve_exact(&a, &b, 2), Err(ArithError::InconsistentSamples));
    }
}
