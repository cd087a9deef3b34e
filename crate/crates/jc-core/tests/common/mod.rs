//! Shared oracles for the integration tests.
//!
//! Everything here recomputes quantities through routes independent of the
//! code under test: dense-matrix eigendecomposition for the evolution,
//! outer-product partial traces for the reduction, adaptive quadrature for
//! Gaussian integrals, and log-gamma Poisson weights for coherent-state
//! amplitudes.

#![allow(dead_code)]
// index loops keep the matrix algebra in the oracles readable
#![allow(clippy::needless_range_loop, clippy::too_many_arguments)]

use num_complex::Complex64 as C64;

use jc_core::{AtomState, FieldState, JointState};

/// Poisson probability mass `e^{−n̄} n̄^k / k!` via log-gamma.
pub fn poisson_pmf(k: usize, nbar: f64) -> f64 {
    if nbar == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    (k as f64 * nbar.ln() - nbar - libm::lgamma(k as f64 + 1.0)).exp()
}

/// Adaptive Simpson quadrature with absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            recurse(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)
                + recurse(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, m, fm, tol, 50)
}

/// Jacobi eigensolver for a real symmetric matrix; returns eigenvalues and
/// the matrix of column eigenvectors. Intended for small dimensions.
pub fn jacobi_eigh(mut a: Vec<Vec<f64>>) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let eig = (0..n).map(|i| a[i][i]).collect();
    (eig, v)
}

/// Full joint-state vector in the flat basis `|g,n⟩ → n`,
/// `|e,n⟩ → (cutoff+1) + n`.
pub fn flatten(s: &JointState) -> Vec<C64> {
    let nc = s.cutoff();
    let mut psi = vec![C64::new(0.0, 0.0); 2 * (nc + 1)];
    for n in 0..=nc {
        psi[n] = s.g()[n];
        psi[(nc + 1) + n] = s.e()[n];
    }
    psi
}

/// Evolve by materializing the interaction Hamiltonian
/// `λ(σ₊a + σ₋a†)` as a dense matrix and exponentiating through its
/// eigendecomposition. Output matches the flat layout of [`flatten`] with
/// joint cutoff `field.cutoff() + 1`.
pub fn evolve_dense_oracle(
    atom: &AtomState,
    field: &FieldState,
    lambda: f64,
    t: f64,
) -> Vec<C64> {
    let nc = field.cutoff() + 1;
    let dim = 2 * (nc + 1);
    let mut h = vec![vec![0.0; dim]; dim];
    for n in 0..nc {
        // ⟨e,n|H|g,n+1⟩ = λ√(n+1)
        let e_n = (nc + 1) + n;
        let g_n1 = n + 1;
        let val = lambda * ((n + 1) as f64).sqrt();
        h[e_n][g_n1] = val;
        h[g_n1][e_n] = val;
    }
    let (eig, v) = jacobi_eigh(h);
    let mut psi0 = vec![C64::new(0.0, 0.0); dim];
    for n in 0..=field.cutoff() {
        psi0[n] = field.amplitude(n) * atom.c_g();
        psi0[(nc + 1) + n] = field.amplitude(n) * atom.c_e();
    }
    // ψ(t) = V e^{−iEt} Vᵀ ψ(0)
    let mut proj = vec![C64::new(0.0, 0.0); dim];
    for (k, slot) in proj.iter_mut().enumerate() {
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..dim {
            acc += psi0[j] * v[j][k];
        }
        *slot = acc * C64::from_polar(1.0, -eig[k] * t);
    }
    let mut psi = vec![C64::new(0.0, 0.0); dim];
    for (j, slot) in psi.iter_mut().enumerate() {
        let mut acc = C64::new(0.0, 0.0);
        for k in 0..dim {
            acc += proj[k] * v[j][k];
        }
        *slot = acc;
    }
    psi
}

/// Partial trace over the field via the full density matrix: builds
/// `ρ = |ψ⟩⟨ψ|` as an explicit `2(cutoff+1)`-dimensional outer product and
/// sums its diagonal blocks. Returns `(a, b)`.
pub fn brute_force_reduce(s: &JointState) -> (f64, C64) {
    let psi = flatten(s);
    let dim = psi.len();
    let half = dim / 2;
    let mut rho = vec![vec![C64::new(0.0, 0.0); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            rho[i][j] = psi[i] * psi[j].conj();
        }
    }
    let mut a = C64::new(0.0, 0.0);
    let mut b = C64::new(0.0, 0.0);
    for n in 0..half {
        a += rho[n][n];
        b += rho[n][half + n];
    }
    (a.re, b)
}

/// Deterministic pseudo-random stream (splitmix64) for test fixtures.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }
}

/// `n` evenly spaced points on `[lo, hi]`, inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

/// Ordinary least-squares slope of `y` against `x`.
pub fn ols_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = points.iter().map(|(_, y)| y).sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (x, y) in points {
        cov += (x - mean_x) * (y - mean_y);
        var += (x - mean_x) * (x - mean_x);
    }
    cov / var
}

/// Random normalized field on `0..=cutoff` with complex Gaussian-ish entries.
pub fn random_field(rng: &mut TestRng, cutoff: usize) -> FieldState {
    let mut amps: Vec<C64> = (0..=cutoff)
        .map(|_| C64::new(rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)))
        .collect();
    let norm = amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    FieldState::from_amplitudes(amps).expect("normalized by construction")
}

/// Random atom state with uniform ground probability and phase.
pub fn random_atom(rng: &mut TestRng) -> AtomState {
    AtomState::new(rng.uniform(), rng.range(0.0, std::f64::consts::TAU))
        .expect("parameters in range")
}
