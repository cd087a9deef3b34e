//! Initial atomic and cavity-field states.
//!
//! The atom is a two-level system with amplitudes `(c_g, c_e)` on the ground
//! and excited levels. The field lives in a truncated Fock space with
//! amplitudes `C_0..C_cutoff`. Constructors validate normalization and, for
//! coherent states, that the truncation leaves negligible tail mass.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Tolerance on `Σ |amplitude|² = 1` for freshly constructed states.
pub const NORM_TOL: f64 = 1e-12;

/// Maximum admissible probability mass on the top two Fock levels of a
/// generated coherent state. Keeps truncation-induced errors far below the
/// 1e-10 conservation tolerances used downstream.
pub const TAIL_TOL: f64 = 1e-20;

/// Pure state of the two-level atom.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AtomState {
    c_g: C64,
    c_e: C64,
}

impl AtomState {
    /// State with ground-level probability `p_g` and relative phase `theta`:
    /// `c_g = √p_g · e^{iθ}`, `c_e = √(1 − p_g)`.
    pub fn new(p_g: f64, theta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p_g) {
            return Err(Error::Domain(format!(
                "ground-state probability must lie in [0, 1], got {p_g}"
            )));
        }
        if !theta.is_finite() {
            return Err(Error::Domain(format!("relative phase must be finite, got {theta}")));
        }
        Ok(Self {
            c_g: C64::from_polar(p_g.sqrt(), theta),
            c_e: C64::new((1.0 - p_g).sqrt(), 0.0),
        })
    }

    /// Build directly from complex amplitudes; they must be normalized.
    pub fn from_amplitudes(c_g: C64, c_e: C64) -> Result<Self> {
        let norm_sq = c_g.norm_sqr() + c_e.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::Domain(format!(
                "atom amplitudes must satisfy |c_g|² + |c_e|² = 1, got {norm_sq}"
            )));
        }
        Ok(Self { c_g, c_e })
    }

    pub(crate) fn from_parts_unchecked(c_g: C64, c_e: C64) -> Self {
        Self { c_g, c_e }
    }

    /// Atom in the ground level.
    pub fn ground() -> Self {
        Self { c_g: C64::new(1.0, 0.0), c_e: C64::new(0.0, 0.0) }
    }

    /// Atom in the excited level.
    pub fn excited() -> Self {
        Self { c_g: C64::new(0.0, 0.0), c_e: C64::new(1.0, 0.0) }
    }

    pub fn c_g(&self) -> C64 {
        self.c_g
    }

    pub fn c_e(&self) -> C64 {
        self.c_e
    }

    /// `arg(c_g) − arg(c_e)`. Zero amplitudes contribute phase 0.
    pub fn relative_phase(&self) -> f64 {
        self.c_g.arg() - self.c_e.arg()
    }

    pub fn norm_sq(&self) -> f64 {
        self.c_g.norm_sqr() + self.c_e.norm_sqr()
    }
}

/// Pure state of the cavity mode in a truncated Fock basis.
///
/// `nbar` records the nominal mean photon number and `phi` the nominal field
/// phase used at construction; both are carried along for downstream scaling
/// (revival times, analytic envelopes).
#[derive(Clone, Debug, PartialEq)]
pub struct FieldState {
    amplitudes: Vec<C64>,
    nbar: f64,
    phi: f64,
}

impl FieldState {
    /// Coherent state `|α⟩` with `α = e^{−iφ}√n̄`, truncated at `cutoff` and
    /// renormalized.
    ///
    /// Amplitudes are evaluated in the log domain,
    /// `ln|C_n| = −n̄/2 + (n/2)·ln n̄ − ln(n!)/2`, so that photon numbers in
    /// the hundreds do not overflow `n!` or `α^n`. The discarded tail must
    /// carry less than [`TAIL_TOL`] probability; use [`default_cutoff`] for a
    /// cutoff that always satisfies this.
    pub fn coherent(nbar: f64, phi: f64, cutoff: usize) -> Result<Self> {
        if !nbar.is_finite() || nbar < 0.0 {
            return Err(Error::Domain(format!("mean photon number must be ≥ 0, got {nbar}")));
        }
        if !phi.is_finite() {
            return Err(Error::Domain(format!("field phase must be finite, got {phi}")));
        }
        let mut amplitudes = Vec::with_capacity(cutoff + 1);
        let mut ln_factorial = 0.0;
        for n in 0..=cutoff {
            if n > 0 {
                ln_factorial += (n as f64).ln();
            }
            let ln_mag = if nbar == 0.0 {
                if n == 0 {
                    0.0
                } else {
                    f64::NEG_INFINITY
                }
            } else {
                -0.5 * nbar + 0.5 * (n as f64) * nbar.ln() - 0.5 * ln_factorial
            };
            amplitudes.push(C64::from_polar(ln_mag.exp(), -(n as f64) * phi));
        }
        let norm_sq: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
        let scale = norm_sq.sqrt().recip();
        for a in &mut amplitudes {
            *a *= scale;
        }
        let field = Self { amplitudes, nbar, phi };
        field.check_tail(nbar, cutoff)?;
        Ok(field)
    }

    /// Uniform-amplitude window of `2·half_width + 1` Fock states centered on
    /// `nbar`: `C_n = 1/√(2D+1)` for `n ∈ [nbar−D, nbar+D]`, else 0.
    pub fn tophat(nbar: usize, half_width: usize, cutoff: usize) -> Result<Self> {
        if half_width > nbar {
            return Err(Error::Domain(format!(
                "top-hat window [{nbar}−{half_width}, {nbar}+{half_width}] extends below 0"
            )));
        }
        if nbar + half_width > cutoff {
            return Err(Error::Domain(format!(
                "top-hat window reaches {} but cutoff is {cutoff}",
                nbar + half_width
            )));
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); cutoff + 1];
        let amp = C64::new((2.0 * half_width as f64 + 1.0).sqrt().recip(), 0.0);
        for slot in &mut amplitudes[nbar - half_width..=nbar + half_width] {
            *slot = amp;
        }
        Ok(Self { amplitudes, nbar: nbar as f64, phi: 0.0 })
    }

    /// Photon-number eigenstate `|n⟩`.
    pub fn fock(n: usize, cutoff: usize) -> Result<Self> {
        if n > cutoff {
            return Err(Error::Domain(format!("Fock index {n} exceeds cutoff {cutoff}")));
        }
        let mut amplitudes = vec![C64::new(0.0, 0.0); cutoff + 1];
        amplitudes[n] = C64::new(1.0, 0.0);
        Ok(Self { amplitudes, nbar: n as f64, phi: 0.0 })
    }

    /// Build from an explicit normalized amplitude vector. The nominal mean
    /// photon number is taken from the amplitudes; the nominal phase is 0.
    pub fn from_amplitudes(amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Domain("field needs at least one amplitude".into()));
        }
        let norm_sq: f64 = amplitudes.iter().map(|c| c.norm_sqr()).sum();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(Error::Domain(format!(
                "field amplitudes must satisfy Σ|C_n|² = 1, got {norm_sq}"
            )));
        }
        let nbar = amplitudes
            .iter()
            .enumerate()
            .map(|(n, c)| n as f64 * c.norm_sqr())
            .sum();
        Ok(Self { amplitudes, nbar, phi: 0.0 })
    }

    pub(crate) fn from_parts_unchecked(amplitudes: Vec<C64>, nbar: f64, phi: f64) -> Self {
        Self { amplitudes, nbar, phi }
    }

    fn check_tail(&self, nbar: f64, cutoff: usize) -> Result<()> {
        let tail = self.amplitudes[cutoff].norm_sqr()
            + if cutoff > 0 { self.amplitudes[cutoff - 1].norm_sqr() } else { 0.0 };
        if tail >= TAIL_TOL {
            return Err(Error::Truncation(format!(
                "cutoff {cutoff} too small for nbar {nbar}: top-level mass {tail:.3e} \
                 (need < {TAIL_TOL:.0e}; default_cutoff gives {})",
                default_cutoff(nbar)
            )));
        }
        Ok(())
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// Amplitude `C_n`, or 0 beyond the cutoff.
    pub fn amplitude(&self, n: usize) -> C64 {
        self.amplitudes.get(n).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    pub fn cutoff(&self) -> usize {
        self.amplitudes.len() - 1
    }

    /// Nominal mean photon number supplied at construction.
    pub fn nbar(&self) -> f64 {
        self.nbar
    }

    /// Nominal field phase supplied at construction.
    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    /// `Σ n·|C_n|²` over the stored amplitudes.
    pub fn mean_photon_number(&self) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(n, c)| n as f64 * c.norm_sqr())
            .sum()
    }
}

/// Cutoff `⌈n̄ + 12√n̄ + 20⌉`, large enough that the Poisson tail above it
/// carries less than [`TAIL_TOL`] probability for any `n̄` of interest.
pub fn default_cutoff(nbar: f64) -> usize {
    (nbar + 12.0 * nbar.sqrt() + 20.0).ceil() as usize
}
