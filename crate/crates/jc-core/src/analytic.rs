//! Closed-form approximations for the reduced-atom dynamics with a
//! large-`n̄` coherent field.
//!
//! Everything here is built from two Gaussian envelopes and two phases:
//!
//! ```text
//! fast phase  Ω(t) = 4√n̄ t / t_c        fast envelope  exp(−2t²/t_c²)
//! slow phase  ω(t) = π t / t_r           slow envelope  exp(−π² t² / (8 n̄ t_r²))
//! ```
//!
//! with the collapse time `t_c = 2/λ` and the revival time `t_r = 2π√n̄/λ`.
//! The transient (fast) envelope governs the initial collapse; the slow one
//! governs the decay of the oscillation amplitude over many revivals.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::reduction::AtomDensity;
use crate::states::AtomState;

/// Smallest mean photon number accepted by [`AnalyticParams`]; the formulas
/// assume `n̄ ≫ 1` and degrade noticeably below ~16.
pub const MIN_NBAR: f64 = 4.0;

/// Collapse time `t_c = 2/λ` of the initial Rabi-oscillation decay.
pub fn collapse_time(lambda: f64) -> f64 {
    2.0 / lambda
}

/// Revival time `t_r = 2π√n̄/λ`.
pub fn revival_time(lambda: f64, nbar: f64) -> f64 {
    2.0 * PI * nbar.sqrt() / lambda
}

/// Parameters of the closed-form expressions.
///
/// `theta` is the relative atomic phase `arg(c_g) − arg(c_e)` after the field
/// phase has been gauged onto the atom (a field phase `φ` shifts it to
/// `θ − φ`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnalyticParams {
    nbar: f64,
    lambda: f64,
    mag_g: f64,
    mag_e: f64,
    theta: f64,
    t_c: f64,
    t_r: f64,
}

impl AnalyticParams {
    pub fn new(nbar: f64, lambda: f64, mag_g: f64, mag_e: f64, theta: f64) -> Result<Self> {
        if !nbar.is_finite() || nbar < MIN_NBAR {
            return Err(Error::Domain(format!(
                "closed forms require nbar ≥ {MIN_NBAR}, got {nbar}"
            )));
        }
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::Domain(format!("coupling must be > 0, got {lambda}")));
        }
        if mag_g < 0.0 || mag_e < 0.0 {
            return Err(Error::Domain(format!(
                "amplitude magnitudes must be ≥ 0, got ({mag_g}, {mag_e})"
            )));
        }
        let norm_sq = mag_g * mag_g + mag_e * mag_e;
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "magnitudes must satisfy mag_g² + mag_e² = 1, got {norm_sq}"
            )));
        }
        if !theta.is_finite() {
            return Err(Error::Domain(format!("relative phase must be finite, got {theta}")));
        }
        Ok(Self {
            nbar,
            lambda,
            mag_g,
            mag_e,
            theta,
            t_c: collapse_time(lambda),
            t_r: revival_time(lambda, nbar),
        })
    }

    /// Take magnitudes and relative phase from an atomic state.
    pub fn for_atom(atom: &AtomState, nbar: f64, lambda: f64) -> Result<Self> {
        Self::new(
            nbar,
            lambda,
            atom.c_g().norm(),
            atom.c_e().norm(),
            atom.relative_phase(),
        )
    }

    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mag_g(&self) -> f64 {
        self.mag_g
    }

    pub fn mag_e(&self) -> f64 {
        self.mag_e
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn collapse_time(&self) -> f64 {
        self.t_c
    }

    pub fn revival_time(&self) -> f64 {
        self.t_r
    }

    /// Phases and envelopes at time `t`; every formula below reads them from
    /// here so that algebraically identical expressions stay bitwise equal.
    fn kinematics(&self, t: f64) -> Kinematics {
        let fast_phase = 4.0 * self.nbar.sqrt() * t / self.t_c;
        let slow_phase = PI * t / self.t_r;
        let fast_env = (-2.0 * t * t / (self.t_c * self.t_c)).exp();
        let slow_env = (-PI * PI * t * t / (8.0 * self.nbar * self.t_r * self.t_r)).exp();
        Kinematics { fast_phase, slow_phase, fast_env, slow_env }
    }
}

struct Kinematics {
    fast_phase: f64,
    slow_phase: f64,
    fast_env: f64,
    slow_env: f64,
}

/// Closed-form reduced density matrix at time `t`:
///
/// ```text
/// a = 1/2 + [ (|C_g|²−|C_e|²)/2 · cos Ω + |C_g C_e| sinθ · sin Ω ] e_f
/// b = [ |C_g C_e| cosθ · cos ω + (i/2) sin ω ] e_s
///   + i [ (|C_g|²−|C_e|²)/2 · sin Ω + |C_g C_e| sinθ · cos Ω ] e_f
/// ```
///
/// with `e_f`, `e_s` the fast and slow envelopes. Being an approximation, the
/// result may graze the positivity bound by the size of the neglected terms.
pub fn analytic_rho(t: f64, p: &AnalyticParams) -> AtomDensity {
    let k = p.kinematics(t);
    let pop_diff = p.mag_g * p.mag_g - p.mag_e * p.mag_e;
    let cross = p.mag_g * p.mag_e;
    let (sin_th, cos_th) = p.theta.sin_cos();
    let (sin_fast, cos_fast) = k.fast_phase.sin_cos();
    let (sin_slow, cos_slow) = k.slow_phase.sin_cos();

    let a = 0.5 + (0.5 * pop_diff * cos_fast + cross * sin_th * sin_fast) * k.fast_env;
    let re_b = cross * cos_th * cos_slow * k.slow_env;
    let im_b = 0.5 * sin_slow * k.slow_env
        + (0.5 * pop_diff * sin_fast + cross * sin_th * cos_fast) * k.fast_env;
    AtomDensity::from_parts_unchecked(a, C64::new(re_b, im_b))
}

/// Closed-form purity for a general initial atomic state:
///
/// ```text
/// P(t) = 1/2
///      + 2 [ |C_g C_e|² cos²θ cos²ω + (1/4) sin²ω ] e_s²
///      + (1/2) [ (|C_g|²−|C_e|²)² + 4|C_g C_e|² sin²θ ] e_f²
///      + sinω [ (|C_g|²−|C_e|²) sinΩ + 2|C_g C_e| sinθ cosΩ ] e_s e_f
/// ```
pub fn purity_t1(t: f64, p: &AnalyticParams) -> f64 {
    let k = p.kinematics(t);
    let pop_diff = p.mag_g * p.mag_g - p.mag_e * p.mag_e;
    let cross = p.mag_g * p.mag_e;
    let (sin_th, cos_th) = p.theta.sin_cos();
    let (sin_fast, cos_fast) = k.fast_phase.sin_cos();
    let (sin_slow, cos_slow) = k.slow_phase.sin_cos();
    let slow_sq = k.slow_env * k.slow_env;
    let fast_sq = k.fast_env * k.fast_env;

    0.5 + 2.0
        * (cross * cross * cos_th * cos_th * cos_slow * cos_slow
            + 0.25 * sin_slow * sin_slow)
        * slow_sq
        + 0.5 * (pop_diff * pop_diff + 4.0 * cross * cross * sin_th * sin_th) * fast_sq
        + sin_slow
            * (pop_diff * sin_fast + 2.0 * cross * sin_th * cos_fast)
            * k.slow_env
            * k.fast_env
}

/// Purity when the atom starts in a bare level (`|C_g C_e| = 0`), the case of
/// maximal oscillation amplitude:
///
/// ```text
/// P(t) = 1/2 + (1/2) sin²ω · e_s² + (1/2) e_f² ± sinω sinΩ · e_s e_f
/// ```
///
/// The sign of the cross term follows the population difference: `−` for an
/// initially excited atom (`C_g = 0`), `+` for an initially ground atom.
pub fn purity_max(t: f64, p: &AnalyticParams, excited_initial: bool) -> f64 {
    let k = p.kinematics(t);
    let (sin_fast, _) = k.fast_phase.sin_cos();
    let (sin_slow, _) = k.slow_phase.sin_cos();
    let slow_sq = k.slow_env * k.slow_env;
    let fast_sq = k.fast_env * k.fast_env;
    let sign = if excited_initial { -1.0 } else { 1.0 };

    0.5 + 0.5 * sin_slow * sin_slow * slow_sq
        + 0.5 * fast_sq
        + sign * sin_slow * sin_fast * k.slow_env * k.fast_env
}

/// Purity for equal magnitudes `|C_g| = |C_e| = 1/√2` as a function of the
/// relative phase `θ`:
///
/// ```text
/// P(t) = 1/2 + (1/2)[1 − sin²θ cos²ω] e_s² + (1/2) sin²θ e_f²
///      + sinω sinθ cosΩ · e_s e_f
/// ```
///
/// Errors if the stored magnitudes are not equal.
pub fn purity_theta(t: f64, p: &AnalyticParams) -> Result<f64> {
    if (p.mag_g - p.mag_e).abs() > 1e-9 {
        return Err(Error::Domain(format!(
            "phase-only purity needs |C_g| = |C_e|, got ({}, {})",
            p.mag_g, p.mag_e
        )));
    }
    let k = p.kinematics(t);
    let sin_th = p.theta.sin();
    let cos_fast = k.fast_phase.cos();
    let (sin_slow, cos_slow) = k.slow_phase.sin_cos();
    let slow_sq = k.slow_env * k.slow_env;
    let fast_sq = k.fast_env * k.fast_env;

    Ok(0.5
        + 0.5 * (1.0 - sin_th * sin_th * cos_slow * cos_slow) * slow_sq
        + 0.5 * sin_th * sin_th * fast_sq
        + sin_slow * sin_th * cos_fast * k.slow_env * k.fast_env)
}

/// The `θ = 0` purity, a pure Gaussian that upper-bounds the post-transient
/// oscillation pattern for any initial atomic state:
///
/// ```text
/// P(t) = 1/2 + (1/2) exp(−π² t² / (4 n̄ t_r²))
/// ```
pub fn purity_min(t: f64, p: &AnalyticParams) -> f64 {
    let k = p.kinematics(t);
    0.5 + 0.5 * k.slow_env * k.slow_env
}

/// Effective `sin²θ` for general coefficients `C_g = e^{−iδ/2}|C_g|`,
/// `C_e = e^{iδ/2}|C_e|`: substituting `1 − 4|C_g C_e cos δ|²` for `sin²θ`
/// extends the phase-only purity to unequal magnitudes.
pub fn general_theta_substitution(mag_g: f64, mag_e: f64, delta: f64) -> f64 {
    let cross = mag_g * mag_e * delta.cos();
    1.0 - 4.0 * cross * cross
}
