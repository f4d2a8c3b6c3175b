//! Small dense complex-Hermitian linear algebra: just enough for graded Gram
//! matrices (Cholesky factorisation, triangular solves, Frobenius norms).
//! Block sizes here are tens at most, so the textbook algorithms are fine.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

/// Errors from matrix factorisations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// Cholesky pivot not strictly positive: the matrix is not positive
    /// definite (up to roundoff).
    NotPositiveDefinite { pivot: usize },
    DimensionMismatch,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotPositiveDefinite { pivot } => {
                write!(f, "matrix not positive definite (pivot {pivot})")
            }
            LinalgError::DimensionMismatch => write!(f, "dimension mismatch"),
        }
    }
}

impl core::error::Error for LinalgError {}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix { n, data: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "square matrix expected");
            data.extend(r);
        }
        CMatrix { n, data }
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        let mut m = CMatrix::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(*d, 0.0);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Hermitian part `(A + A*)/2`.
    pub fn hermitian_part(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = (self[(i, j)] + self[(j, i)].conj()) * 0.5;
            }
        }
        out
    }

    pub fn adjoint(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn matmul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: f64) -> CMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `v* A v` for a vector `v` (returns the real part; `A` Hermitian).
    pub fn quadratic_form(&self, v: &[Complex64]) -> f64 {
        assert_eq!(v.len(), self.n);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.n {
            for j in 0..self.n {
                acc += v[i].conj() * self[(i, j)] * v[j];
            }
        }
        acc.re
    }

    /// `tr(A B)`.
    pub fn trace_product(&self, other: &CMatrix) -> Complex64 {
        assert_eq!(self.n, other.n);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..self.n {
            for k in 0..self.n {
                acc += self[(i, k)] * other[(k, i)];
            }
        }
        acc
    }

    /// Cholesky factorisation `A = L L*` (lower `L`), requiring positive
    /// definiteness. Only the lower triangle of `self` is read.
    pub fn cholesky(&self) -> Result<CholeskyFactor, LinalgError> {
        let n = self.n;
        let mut l = CMatrix::zeros(n);
        for j in 0..n {
            let mut d = self[(j, j)].re;
            for k in 0..j {
                d -= l[(j, k)].norm_sqr();
            }
            if !(d > 0.0) || !d.is_finite() {
                return Err(LinalgError::NotPositiveDefinite { pivot: j });
            }
            let dj = d.sqrt();
            l[(j, j)] = Complex64::new(dj, 0.0);
            for i in (j + 1)..n {
                let mut s = self[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)].conj();
                }
                l[(i, j)] = s / dj;
            }
        }
        Ok(CholeskyFactor { l })
    }
}

impl core::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

/// Lower-triangular Cholesky factor of a positive-definite Hermitian matrix.
#[derive(Debug, Clone)]
pub struct CholeskyFactor {
    l: CMatrix,
}

impl CholeskyFactor {
    pub fn lower(&self) -> &CMatrix {
        &self.l
    }

    /// Solves `L y = b` (forward substitution).
    pub fn solve_lower(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.l.n;
        assert_eq!(b.len(), n);
        let mut y = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut s = b[i];
            for k in 0..i {
                s -= self.l[(i, k)] * y[k];
            }
            y[i] = s / self.l[(i, i)];
        }
        y
    }

    /// Solves `L* x = b` (back substitution with the adjoint).
    pub fn solve_upper_adjoint(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.l.n;
        assert_eq!(b.len(), n);
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        for i in (0..n).rev() {
            let mut s = b[i];
            for k in (i + 1)..n {
                s -= self.l[(k, i)].conj() * x[k];
            }
            x[i] = s / self.l[(i, i)];
        }
        x
    }

    /// Given raw basis values `s` at a point, returns the values of the
    /// orthonormalised basis: `t = L^{-1} s` (so that the Gram matrix of `t`
    /// is the identity when the Gram of `s` is `A = L L*`).
    pub fn orthonormalize(&self, s: &[Complex64]) -> Vec<Complex64> {
        self.solve_lower(s)
    }

    /// Congruence transform `L^{-1} B L^{-*}` — the matrix of `B` in the
    /// orthonormalised basis.
    pub fn congruence(&self, b: &CMatrix) -> CMatrix {
        let n = self.l.n;
        assert_eq!(b.n, n);
        // Solve L X = B columnwise, then (L X*)* columnwise.
        let mut x = CMatrix::zeros(n);
        for j in 0..n {
            let col: Vec<Complex64> = (0..n).map(|i| b[(i, j)]).collect();
            let y = self.solve_lower(&col);
            for i in 0..n {
                x[(i, j)] = y[i];
            }
        }
        let xa = x.adjoint();
        let mut out = CMatrix::zeros(n);
        for j in 0..n {
            let col: Vec<Complex64> = (0..n).map(|i| xa[(i, j)]).collect();
            let y = self.solve_lower(&col);
            for i in 0..n {
                out[(i, j)] = y[i];
            }
        }
        out.adjoint()
    }
}

/// Gram–Schmidt unitarisation of the columns of a square matrix (used to
/// build random unitaries for orbit tests). Columns must be independent.
pub fn gram_schmidt_unitary(m: &CMatrix) -> CMatrix {
    let n = m.size();
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| m[(i, j)]).collect())
        .collect();
    for j in 0..n {
        for k in 0..j {
            let proj: Complex64 = (0..n).map(|i| cols[k][i].conj() * cols[j][i]).sum();
            for i in 0..n {
                let d = proj * cols[k][i];
                cols[j][i] -= d;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        assert!(norm > 1e-12, "dependent columns in gram_schmidt_unitary");
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    let mut out = CMatrix::zeros(n);
    for j in 0..n {
        for i in 0..n {
            out[(i, j)] = cols[j][i];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn cholesky_reconstructs() {
        let a = CMatrix::from_rows(vec![
            vec![Complex64::new(4.0, 0.0), Complex64::new(1.0, -1.0)],
            vec![Complex64::new(1.0, 1.0), Complex64::new(3.0, 0.0)],
        ]);
        let ch = a.cholesky().unwrap();
        let rec = ch.lower().matmul(&ch.lower().adjoint());
        approx((rec.sub(&a)).frobenius_norm(), 0.0, 1e-12);
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = CMatrix::from_rows(vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(3.0, 0.0)],
            vec![Complex64::new(3.0, 0.0), Complex64::new(1.0, 0.0)],
        ]);
        assert!(matches!(
            a.cholesky(),
            Err(LinalgError::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn congruence_of_self_is_identity() {
        let a = CMatrix::from_rows(vec![
            vec![Complex64::new(2.0, 0.0), Complex64::new(0.5, 0.25)],
            vec![Complex64::new(0.5, -0.25), Complex64::new(1.5, 0.0)],
        ]);
        let ch = a.cholesky().unwrap();
        let id = ch.congruence(&a);
        approx(id.sub(&CMatrix::identity(2)).frobenius_norm(), 0.0, 1e-12);
    }

    #[test]
    fn unitary_from_gram_schmidt() {
        let m = CMatrix::from_rows(vec![
            vec![Complex64::new(1.0, 0.2), Complex64::new(0.3, -0.4)],
            vec![Complex64::new(-0.5, 0.1), Complex64::new(0.9, 0.7)],
        ]);
        let u = gram_schmidt_unitary(&m);
        let uu = u.adjoint().matmul(&u);
        approx(uu.sub(&CMatrix::identity(2)).frobenius_norm(), 0.0, 1e-12);
    }
}
