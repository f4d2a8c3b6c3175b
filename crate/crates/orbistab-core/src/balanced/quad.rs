//! Quadrature on a genus-0 orbifold curve with cone points at 0 and ∞.
//!
//! The curve is covered by two caps, `|x| ≤ 1` and `|x| ≥ 1`, each
//! parametrised by its cone-cover coordinate (`x = z^{m₀}`, `1/x = w^{m∞}`),
//! so integrands are smooth upstairs. Orbifold integration divides each
//! cap's upstairs integral by its deck-group order.
//!
//! Two modes: an S¹-invariant radial reduction (exact angular integration —
//! Gram matrices are diagonal in the monomial basis), and a full tensor grid
//! (Gauss–Legendre radial × trapezoid angular).

use alloc::vec::Vec;

use num_complex::Complex64;

/// Which cap of the curve a node lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    Zero,
    Infinity,
}

impl Cap {
    pub fn both() -> [Cap; 2] {
        [Cap::Zero, Cap::Infinity]
    }
}

/// Quadrature mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadMode {
    /// Radial nodes only; angular integration is exact by symmetry.
    Invariant1d,
    /// Radial × angular tensor grid.
    Grid2d,
}

/// A quadrature node: cap, cover coordinate, and the weight for integrating
/// densities with respect to upstairs Lebesgue measure `dA`, including the
/// `1/m` orbifold factor of its cap.
#[derive(Debug, Clone, Copy)]
pub struct Node {
    pub cap: Cap,
    pub z: Complex64,
    pub weight: f64,
}

/// Gauss–Legendre nodes and weights on `[0, 1]`.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    // Newton on P_n with the Chebyshev initial guess; standard and plenty
    // accurate for the few hundred nodes used here.
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (core::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // Map [-1, 1] → [0, 1].
        nodes.push(0.5 * (x + 1.0));
        weights.push(0.5 * w);
    }
    nodes.reverse();
    weights.reverse();
    (nodes, weights)
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Quadrature scheme over both caps.
#[derive(Debug, Clone)]
pub struct QuadratureScheme {
    mode: QuadMode,
    n_radial: usize,
    n_angular: usize,
    nodes: Vec<Node>,
}

impl QuadratureScheme {
    /// Builds the scheme; `m0`, `m_inf` are the cover orders of the caps.
    pub fn new(mode: QuadMode, m0: u32, m_inf: u32, n_radial: usize, n_angular: usize) -> Self {
        let (sig, gl_w) = gauss_legendre_unit(n_radial);
        let mut nodes = Vec::new();
        for cap in Cap::both() {
            let m = match cap {
                Cap::Zero => m0,
                Cap::Infinity => m_inf,
            } as f64;
            match mode {
                QuadMode::Invariant1d => {
                    // ∫_{|z|≤1} F(|z|²) dA = 2π ∫₀¹ F(σ²) σ dσ.
                    for (s, w) in sig.iter().zip(&gl_w) {
                        nodes.push(Node {
                            cap,
                            z: Complex64::new(*s, 0.0),
                            weight: 2.0 * core::f64::consts::PI * s * w / m,
                        });
                    }
                }
                QuadMode::Grid2d => {
                    let dpsi = 2.0 * core::f64::consts::PI / n_angular as f64;
                    for (s, w) in sig.iter().zip(&gl_w) {
                        for a in 0..n_angular {
                            let psi = dpsi * a as f64;
                            nodes.push(Node {
                                cap,
                                z: Complex64::from_polar(*s, psi),
                                weight: s * w * dpsi / m,
                            });
                        }
                    }
                }
            }
        }
        QuadratureScheme { mode, n_radial, n_angular, nodes }
    }

    /// Doubled radial (and angular, in grid mode) resolution, for
    /// convergence checks.
    pub fn doubled(&self, m0: u32, m_inf: u32) -> Self {
        QuadratureScheme::new(self.mode, m0, m_inf, self.n_radial * 2, self.n_angular * 2)
    }

    pub fn mode(&self) -> QuadMode {
        self.mode
    }

    pub fn n_radial(&self) -> usize {
        self.n_radial
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_i f(node_i)` — integrates an upstairs density over the curve.
    pub fn integrate<F: Fn(&Node) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().map(|n| n.weight * f(n)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre_unit(8);
        for deg in 0..16u32 {
            let value: f64 = x
                .iter()
                .zip(&w)
                .map(|(xi, wi)| wi * xi.powi(deg as i32))
                .sum();
            let exact = 1.0 / (deg as f64 + 1.0);
            assert!((value - exact).abs() < 1e-14, "degree {deg}");
        }
    }

    #[test]
    fn disk_area_both_modes() {
        // ∫_{|z|≤1} dA = π per cap; with m = 1 both caps sum to 2π.
        for mode in [QuadMode::Invariant1d, QuadMode::Grid2d] {
            let q = QuadratureScheme::new(mode, 1, 1, 24, 16);
            let total = q.integrate(|_| 1.0);
            assert!((total - 2.0 * core::f64::consts::PI).abs() < 1e-12);
        }
    }

    #[test]
    fn round_sphere_volume() {
        // Density (1/π)(1+R)^{-2} on both caps integrates to 1 (the round
        // form of O(1) on the line).
        let q = QuadratureScheme::new(QuadMode::Invariant1d, 1, 1, 40, 1);
        let total = q.integrate(|n| {
            let r = n.z.norm_sqr();
            (1.0 / core::f64::consts::PI) * (1.0 + r).powi(-2)
        });
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn grid_mode_kills_angular_harmonics() {
        let q = QuadratureScheme::new(QuadMode::Grid2d, 1, 1, 16, 32);
        let mut acc = Complex64::new(0.0, 0.0);
        for n in q.nodes() {
            acc += n.weight * n.z.powi(3) * (1.0 - n.z.norm_sqr());
        }
        assert!(acc.norm() < 1e-14);
    }
}
