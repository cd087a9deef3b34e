//! Phase gauge `R(θ, φ) = exp[i(θσ_z/2 + φ a†a)]` acting on states.
//!
//! The gauge multiplies `|g⟩`, `|e⟩`, `|n⟩` by `e^{−iθ/2}`, `e^{iθ/2}`,
//! `e^{inφ}` respectively. For `θ = φ` it commutes with the resonant
//! evolution, which is what lets a coherent-field phase be traded for a
//! relative atomic phase.

use num_complex::Complex64 as C64;

use crate::evolution::JointState;
use crate::states::{AtomState, FieldState};

fn rot(angle: f64) -> C64 {
    C64::from_polar(1.0, angle)
}

/// Gauge a product state: atom `(c_g, c_e) ↦ (e^{−iθ/2}c_g, e^{iθ/2}c_e)`,
/// field `C_n ↦ e^{inφ}C_n`.
///
/// The returned field's nominal phase is `φ₀ − φ`: gauging a coherent state
/// of phase `φ₀` by `φ` yields the coherent state of phase `φ₀ − φ`.
pub fn apply_gauge_product(
    atom: &AtomState,
    field: &FieldState,
    theta: f64,
    phi: f64,
) -> (AtomState, FieldState) {
    let gauged_atom = AtomState::from_parts_unchecked(
        atom.c_g() * rot(-0.5 * theta),
        atom.c_e() * rot(0.5 * theta),
    );
    let amplitudes = field
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(n, c)| c * rot(n as f64 * phi))
        .collect();
    let gauged_field =
        FieldState::from_parts_unchecked(amplitudes, field.nbar(), field.phi() - phi);
    (gauged_atom, gauged_field)
}

/// Gauge a joint state: `g[n] ↦ e^{i(nφ−θ/2)} g[n]`, `e[n] ↦ e^{i(nφ+θ/2)} e[n]`.
pub fn apply_gauge_joint(s: &JointState, theta: f64, phi: f64) -> JointState {
    let g = s
        .g()
        .iter()
        .enumerate()
        .map(|(n, c)| c * rot(n as f64 * phi - 0.5 * theta))
        .collect();
    let e = s
        .e()
        .iter()
        .enumerate()
        .map(|(n, c)| c * rot(n as f64 * phi + 0.5 * theta))
        .collect();
    JointState::from_parts_unchecked(g, e)
}
