//! Reduced density matrix of the atom, purity, and inversion.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::evolution::JointState;

/// Slack on the positivity bound `|b|² ≤ a(1−a)`.
pub const POSITIVITY_TOL: f64 = 1e-12;

/// Reduced 2×2 density matrix of the atom,
///
/// ```text
/// ρ_A = [ a    b   ]
///       [ b*  1−a  ]
/// ```
///
/// parametrized by the ground-state population `a = ⟨g|ρ_A|g⟩` and the
/// coherence `b = ⟨g|ρ_A|e⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AtomDensity {
    a: f64,
    b: C64,
}

impl AtomDensity {
    /// Build from the population/coherence pair, enforcing positivity.
    pub fn new(a: f64, b: C64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::Invariant(format!("population a = {a} outside [0, 1]")));
        }
        if b.norm_sqr() > a * (1.0 - a) + POSITIVITY_TOL {
            return Err(Error::Invariant(format!(
                "coherence too large for a positive matrix: |b|² = {} > a(1−a) = {}",
                b.norm_sqr(),
                a * (1.0 - a)
            )));
        }
        Ok(Self { a, b })
    }

    pub(crate) fn from_parts_unchecked(a: f64, b: C64) -> Self {
        Self { a, b }
    }

    /// Ground-state population `⟨g|ρ_A|g⟩`.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Coherence `⟨g|ρ_A|e⟩`.
    pub fn b(&self) -> C64 {
        self.b
    }

    /// `Tr(ρ_A²) = a² + (1−a)² + 2|b|²`; 1 for a pure state, 1/2 when
    /// maximally mixed.
    pub fn purity(&self) -> f64 {
        self.a * self.a + (1.0 - self.a) * (1.0 - self.a) + 2.0 * self.b.norm_sqr()
    }

    /// `⟨σ_z⟩ = 1 − 2a`.
    pub fn inversion(&self) -> f64 {
        1.0 - 2.0 * self.a
    }
}

/// Trace out the field: `a = Σ_n |g[n]|²`, `b = Σ_n g[n]·conj(e[n])`.
///
/// For a normalized input the positivity bound holds by Cauchy–Schwarz, so no
/// re-validation is performed.
pub fn reduce(s: &JointState) -> AtomDensity {
    let a: f64 = s.g().iter().map(|c| c.norm_sqr()).sum();
    let b: C64 = s.g().iter().zip(s.e().iter()).map(|(g, e)| g * e.conj()).sum();
    AtomDensity::from_parts_unchecked(a, b)
}
