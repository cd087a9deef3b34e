//! Poisson-weighted oscillatory sums and their Gaussian-integral closed
//! forms.
//!
//! The reduced-atom matrix elements are sums of the shape
//! `Σ_n w(n)·f(√n λt)` with the near-Gaussian weight
//! `w(n) = (2πn̄)^{−1/2} exp(−(n−n̄)²/(2n̄))`. Linearizing `√n` about `n̄` and
//! replacing the sum by an integral turns each of them into a Gaussian
//! characteristic function, giving the closed forms evaluated here alongside
//! their direct numerical counterparts.

use num_complex::Complex64 as C64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Parameters of the weighted sums: mean `nbar`, the dimensionless product
/// `λt`, and the summation cutoff `n_max`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SumParams {
    nbar: f64,
    lambda_t: f64,
    n_max: usize,
}

impl SumParams {
    /// Use the smallest admissible cutoff, `⌈n̄ + 12√n̄⌉`.
    pub fn new(nbar: f64, lambda_t: f64) -> Result<Self> {
        let n_max = Self::min_n_max(nbar);
        Self::with_n_max(nbar, lambda_t, n_max)
    }

    pub fn with_n_max(nbar: f64, lambda_t: f64, n_max: usize) -> Result<Self> {
        if !nbar.is_finite() || nbar <= 0.0 {
            return Err(Error::Domain(format!("nbar must be > 0, got {nbar}")));
        }
        if !lambda_t.is_finite() {
            return Err(Error::Domain(format!("λt must be finite, got {lambda_t}")));
        }
        if n_max < Self::min_n_max(nbar) {
            return Err(Error::Domain(format!(
                "n_max = {n_max} truncates the Gaussian weight; need ≥ {}",
                Self::min_n_max(nbar)
            )));
        }
        Ok(Self { nbar, lambda_t, n_max })
    }

    /// Smallest cutoff keeping the truncated weight below ~1e−31.
    pub fn min_n_max(nbar: f64) -> usize {
        (nbar + 12.0 * nbar.sqrt()).ceil() as usize
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    pub fn lambda_t(&self) -> f64 {
        self.lambda_t
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn weight(&self, n: f64) -> f64 {
        (-(n - self.nbar) * (n - self.nbar) / (2.0 * self.nbar)).exp()
    }

    fn norm(&self) -> f64 {
        (TAU * self.nbar).sqrt().recip()
    }
}

/// First-order expansions of `√n` and `1/√n` about `n = n̄`:
/// `√n ≈ √n̄/2 + n/(2√n̄)` and `1/√n ≈ 3/(2√n̄) − n/(2√n̄³)`.
///
/// Exact at `n = n̄`; the error grows away from the expansion point, which is
/// harmless under a weight concentrated near `n̄`.
pub fn sqrt_linearization(n: f64, nbar: f64) -> (f64, f64) {
    let root = nbar.sqrt();
    (0.5 * root + 0.5 * n / root, 1.5 / root - 0.5 * n / (nbar * root))
}

/// Characteristic function of a Gaussian of mean `beta_bar` and standard
/// deviation `sigma`:
///
/// ```text
/// (σ√2π)^{−1} ∫ exp[−(β−β̄)²/(2σ²) − iβt] dβ = exp(−σ²t²/2 − iβ̄t)
/// ```
///
/// Its real and imaginary parts give the cosine and sine integrals used to
/// close the sums below.
pub fn gaussian_characteristic(sigma: f64, beta_bar: f64, t: f64) -> C64 {
    C64::from_polar((-0.5 * sigma * sigma * t * t).exp(), -beta_bar * t)
}

/// `S₁ = (2πn̄)^{−1/2} Σ_{n≥1} exp[−(n−n̄)²/(2n̄) + iλt/(2√n)]`, summed
/// directly.
pub fn sum_s1_numeric(p: &SumParams) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for n in 1..=p.n_max {
        let nf = n as f64;
        acc += C64::from_polar(p.weight(nf), 0.5 * p.lambda_t / nf.sqrt());
    }
    acc * p.norm()
}

/// Closed form of `S₁`: `exp(−λ²t²/(32n̄²) + iλt/(2√n̄))`.
pub fn sum_s1_closed(p: &SumParams) -> C64 {
    let lt = p.lambda_t;
    C64::from_polar(
        (-lt * lt / (32.0 * p.nbar * p.nbar)).exp(),
        0.5 * lt / p.nbar.sqrt(),
    )
}

/// `S₂ = (2πn̄)^{−1/2} Σ_{n≥1} exp[−(n−n̄)²/(2n̄)] cos²(√n λt)`, summed
/// directly.
pub fn sum_s2_numeric(p: &SumParams) -> f64 {
    let mut acc = 0.0;
    for n in 1..=p.n_max {
        let nf = n as f64;
        let c = (nf.sqrt() * p.lambda_t).cos();
        acc += p.weight(nf) * c * c;
    }
    acc * p.norm()
}

/// Closed form of `S₂`: `1/2 + (1/2)exp(−λ²t²/2)cos(2√n̄ λt)`.
///
/// Obtained by halving the angle (`cos² x = (1 + cos 2x)/2`), linearizing
/// `2√n λt`, and applying the cosine form of [`gaussian_characteristic`]; the
/// half amplitude and doubled frequency are both required for the direct sum
/// to be reproduced.
pub fn sum_s2_closed(p: &SumParams) -> f64 {
    let lt = p.lambda_t;
    0.5 + 0.5 * (-0.5 * lt * lt).exp() * (2.0 * p.nbar.sqrt() * lt).cos()
}

/// `S₃ = (2πn̄)^{−1/2} Σ_{n≥1} exp[−(n−n̄)²/(2n̄)] cos(√n λt) sin(√(n+1) λt)`,
/// summed directly.
pub fn sum_s3_numeric(p: &SumParams) -> f64 {
    let mut acc = 0.0;
    for n in 1..=p.n_max {
        let nf = n as f64;
        acc += p.weight(nf) * (nf.sqrt() * p.lambda_t).cos() * ((nf + 1.0).sqrt() * p.lambda_t).sin();
    }
    acc * p.norm()
}

/// Closed form of `S₃`, one fast and one slow term:
///
/// ```text
/// (1/2)exp(−λ²t²/2) sin(2√n̄ λt) + (1/2)exp(−λ²t²/(32n̄²)) sin(λt/(2√n̄))
/// ```
pub fn sum_s3_closed(p: &SumParams) -> f64 {
    let lt = p.lambda_t;
    let root = p.nbar.sqrt();
    0.5 * (-0.5 * lt * lt).exp() * (2.0 * root * lt).sin()
        + 0.5 * (-lt * lt / (32.0 * p.nbar * p.nbar)).exp() * (0.5 * lt / root).sin()
}
