//! Floating-point quadrature oracles. These are NOT rigorous; they exist to
//! cross-check the certified enclosures and the exact values.
//!
//! Both integrands are smooth and periodic in the angle, so the uniform
//! trapezoid rule converges spectrally. Nodes are doubled until two
//! successive estimates agree to [`AGREEMENT_TOL`].

use num_complex::Complex64;
use std::f64::consts::PI;

use super::AsymptoticsError;

pub const AGREEMENT_TOL: f64 = 1e-12;
pub const MAX_NODES: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub re: f64,
    /// Imaginary part of the quadrature sum; the exact integral is real.
    pub im: f64,
    pub nodes: usize,
}

fn refine(
    start: usize,
    min_nodes: usize,
    eval: impl Fn(usize) -> Complex64,
) -> Result<OracleValue, AsymptoticsError> {
    if start < min_nodes || !start.is_power_of_two() {
        return Err(AsymptoticsError::InvalidNodes(start));
    }
    let mut nodes = start;
    let mut prev = eval(nodes);
    while nodes < MAX_NODES {
        nodes *= 2;
        let next = eval(nodes);
        if (next - prev).norm() < AGREEMENT_TOL {
            return Ok(OracleValue {
                re: next.re,
                im: next.im,
                nodes,
            });
        }
        prev = next;
    }
    Err(AsymptoticsError::NoConvergence { nodes })
}

/// `J_k(x) = (1/2π)∫_{−π}^{π} exp(−i·x·sin α + i·k·α) dα` by the trapezoid
/// rule. `nodes` is the starting node count (a power of two, at least 16).
pub fn bessel_quadrature_oracle(k: i64, x: f64, nodes: usize) -> Result<OracleValue, AsymptoticsError> {
    let kf = k as f64;
    refine(nodes, 16, |n| {
        let h = 2.0 * PI / n as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..n {
            let a = -PI + h * j as f64;
            acc += Complex64::from_polar(1.0, kf * a - x * a.sin());
        }
        acc / n as f64
    })
}

/// `L_n(1) = (e/2πi)∮ e^{−z}·zⁿ/(z−1)^{n+1} dz` on the circle `|z − 1/2| = √(n+1)`.
///
/// With `z = 1/2 + r·e^{iα}` the integrand becomes
/// `(e·r/2π)·exp(−z + n·log z − (n+1)·log(z−1))·e^{iα}`; it is formed through
/// its logarithm so that `|z|ⁿ` never overflows.
pub fn laguerre_contour_oracle(n: u64, nodes: usize) -> Result<OracleValue, AsymptoticsError> {
    if n == 0 {
        return Err(AsymptoticsError::InvalidIndex(n));
    }
    let r = ((n + 1) as f64).sqrt();
    let nf = n as f64;
    refine(nodes, 64, |m| {
        let h = 2.0 * PI / m as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..m {
            let a = -PI + h * j as f64;
            let e_ia = Complex64::from_polar(1.0, a);
            let z = 0.5 + r * e_ia;
            let log = 1.0 - z + nf * z.ln() - (nf + 1.0) * (z - 1.0).ln() + r.ln() + Complex64::new(0.0, a);
            acc += log.exp();
        }
        acc / m as f64
    })
}
