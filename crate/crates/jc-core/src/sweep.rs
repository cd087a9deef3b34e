//! Parameter sweeps over time grids, exact-vs-closed-form comparison
//! reports, and CSV emission.
//!
//! A sweep is fully described by a [`RunConfig`]; identical configs produce
//! byte-identical CSV output. Grid points are evaluated in parallel when the
//! `parallel` feature is enabled, with output order fixed by the grid.

use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use crate::analytic::{analytic_rho, purity_t1, revival_time, AnalyticParams};
use crate::error::{Error, Result};
use crate::evolution::evolve;
use crate::exec::map_slice;
use crate::reduction::reduce;
use crate::states::{default_cutoff, AtomState, FieldState};

/// Allowed drift of the joint-state norm and excitation expectation along a
/// sweep before the run is aborted with an invariant error.
pub const CONSERVATION_TOL: f64 = 1e-10;

/// Slack on the purity bounds `[1/2, 1]` for reduced states along a sweep.
pub const PURITY_TOL: f64 = 1e-12;

/// Initial field preparation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Coherent,
    Tophat,
    Fock,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Coherent => write!(f, "coherent"),
            FieldKind::Tophat => write!(f, "tophat"),
            FieldKind::Fock => write!(f, "fock"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coherent" => Ok(FieldKind::Coherent),
            "tophat" => Ok(FieldKind::Tophat),
            "fock" => Ok(FieldKind::Fock),
            other => Err(Error::config(
                "field_kind",
                format!("expected coherent|tophat|fock, got `{other}`"),
            )),
        }
    }
}

/// Which purity columns to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Analytic,
    Both,
}

impl Mode {
    pub fn wants_exact(&self) -> bool {
        matches!(self, Mode::Exact | Mode::Both)
    }

    pub fn wants_analytic(&self) -> bool {
        matches!(self, Mode::Analytic | Mode::Both)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => write!(f, "exact"),
            Mode::Analytic => write!(f, "analytic"),
            Mode::Both => write!(f, "both"),
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "analytic" => Ok(Mode::Analytic),
            "both" => Ok(Mode::Both),
            other => Err(Error::config("mode", format!("expected exact|analytic|both, got `{other}`"))),
        }
    }
}

/// Full description of one sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Mean photon number (also the top-hat center and Fock index).
    pub nbar: f64,
    /// Atom–cavity coupling; time columns are in units of 1/lambda.
    pub lambda: f64,
    /// Ground-level probability of the initial atom.
    pub p_g: f64,
    /// Relative atomic phase arg(c_g) − arg(c_e).
    pub theta: f64,
    /// Field phase.
    pub phi: f64,
    pub field_kind: FieldKind,
    /// Half-width D of the top-hat window (ignored for other field kinds).
    pub tophat_halfwidth: usize,
    /// Fock-space cutoff; `None` selects `default_cutoff(nbar)`.
    pub cutoff: Option<usize>,
    /// Grid extent as a multiple of the revival time.
    pub t_max_over_tr: f64,
    /// Number of grid points (inclusive of both endpoints).
    pub steps: usize,
    pub mode: Mode,
    /// CSV destination; `None` means the caller decides (stdout in the CLI).
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            nbar: 400.0,
            lambda: 1.0,
            p_g: 0.5,
            theta: 0.0,
            phi: 0.0,
            field_kind: FieldKind::Coherent,
            tophat_halfwidth: 0,
            cutoff: None,
            t_max_over_tr: 2.0,
            steps: 2000,
            mode: Mode::Both,
            output_path: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.nbar.is_finite() || self.nbar <= 0.0 {
            return Err(Error::config("nbar", format!("must be > 0, got {}", self.nbar)));
        }
        if !self.lambda.is_finite() || self.lambda <= 0.0 {
            return Err(Error::config("lambda", format!("must be > 0, got {}", self.lambda)));
        }
        if !(0.0..=1.0).contains(&self.p_g) {
            return Err(Error::config("p_g", format!("must lie in [0, 1], got {}", self.p_g)));
        }
        if !self.theta.is_finite() {
            return Err(Error::config("theta", "must be finite"));
        }
        if !self.phi.is_finite() {
            return Err(Error::config("phi", "must be finite"));
        }
        if !self.t_max_over_tr.is_finite() || self.t_max_over_tr <= 0.0 {
            return Err(Error::config(
                "t_max_over_tr",
                format!("must be > 0, got {}", self.t_max_over_tr),
            ));
        }
        if self.steps < 2 {
            return Err(Error::config("steps", format!("need at least 2, got {}", self.steps)));
        }
        if matches!(self.field_kind, FieldKind::Tophat | FieldKind::Fock)
            && self.nbar.fract() != 0.0
        {
            return Err(Error::config(
                "nbar",
                format!("{} fields need an integer nbar, got {}", self.field_kind, self.nbar),
            ));
        }
        Ok(())
    }

    pub fn resolved_cutoff(&self) -> usize {
        self.cutoff.unwrap_or_else(|| default_cutoff(self.nbar))
    }

    pub fn build_atom(&self) -> Result<AtomState> {
        AtomState::new(self.p_g, self.theta)
    }

    pub fn build_field(&self) -> Result<FieldState> {
        let cutoff = self.resolved_cutoff();
        match self.field_kind {
            FieldKind::Coherent => FieldState::coherent(self.nbar, self.phi, cutoff),
            FieldKind::Tophat => {
                FieldState::tophat(self.nbar as usize, self.tophat_halfwidth, cutoff)
            }
            FieldKind::Fock => FieldState::fock(self.nbar as usize, cutoff),
        }
    }

    /// Closed-form parameters for the configured atom; the field phase is
    /// gauged onto the atom, shifting the relative phase to `θ − φ`.
    pub fn analytic_params(&self) -> Result<AnalyticParams> {
        AnalyticParams::new(
            self.nbar,
            self.lambda,
            self.p_g.sqrt(),
            (1.0 - self.p_g).sqrt(),
            self.theta - self.phi,
        )
    }

    pub fn revival_time(&self) -> f64 {
        revival_time(self.lambda, self.nbar)
    }

    /// Uniform grid of `steps` points on `[0, t_max_over_tr · t_r]`.
    pub fn times(&self) -> Vec<f64> {
        let t_max = self.t_max_over_tr * self.revival_time();
        let denom = (self.steps - 1) as f64;
        (0..self.steps).map(|k| t_max * k as f64 / denom).collect()
    }
}

/// One time sample of a sweep.
///
/// `a`, `re_b`, `im_b`, `inversion` describe the reduced atom: from the exact
/// evolution when it was computed, otherwise from the closed-form density
/// matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub t: f64,
    pub t_over_tr: f64,
    pub purity_exact: Option<f64>,
    pub purity_analytic: Option<f64>,
    pub a: f64,
    pub re_b: f64,
    pub im_b: f64,
    pub inversion: f64,
}

/// CSV column layout, fixed as a contract.
pub const CSV_HEADER: &str = "t,t_over_tr,purity_exact,purity_analytic,a,re_b,im_b,inversion";

/// Write rows in the [`CSV_HEADER`] schema. Absent quantities become empty
/// fields; numbers use the shortest representation that round-trips.
pub fn write_csv<W: Write>(rows: &[SweepRow], mut w: W) -> io::Result<()> {
    fn opt(v: Option<f64>) -> String {
        v.map(|x| x.to_string()).unwrap_or_default()
    }
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            r.t,
            r.t_over_tr,
            opt(r.purity_exact),
            opt(r.purity_analytic),
            r.a,
            r.re_b,
            r.im_b,
            r.inversion
        )?;
    }
    Ok(())
}

/// Run the sweep described by `cfg`.
///
/// Exact rows are checked as they are produced: the joint-state norm and the
/// excitation expectation must stay within [`CONSERVATION_TOL`] of their
/// `t = 0` values and every purity must lie in `[1/2, 1]` within
/// [`PURITY_TOL`], otherwise the sweep fails with an invariant error.
pub fn run_sweep(cfg: &RunConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let atom = cfg.build_atom()?;
    let t_r = cfg.revival_time();
    let times = cfg.times();

    let field = if cfg.mode.wants_exact() { Some(cfg.build_field()?) } else { None };
    let params = if cfg.mode.wants_analytic() { Some(cfg.analytic_params()?) } else { None };
    let excitation_ref = field
        .as_ref()
        .map(|f| evolve(&atom, f, cfg.lambda, 0.0).excitation_expectation());

    let rows: Vec<Result<SweepRow>> = map_slice(&times, |&t| {
        let mut purity_exact = None;
        let mut exact_density = None;
        if let Some(field) = &field {
            let s = evolve(&atom, field, cfg.lambda, t);
            let norm_sq = s.norm_sq();
            if (norm_sq - 1.0).abs() > CONSERVATION_TOL {
                return Err(Error::Invariant(format!(
                    "norm² drifted to {norm_sq} at t = {t}"
                )));
            }
            let excitation = s.excitation_expectation();
            let reference = excitation_ref.unwrap();
            if (excitation - reference).abs() > CONSERVATION_TOL {
                return Err(Error::Invariant(format!(
                    "excitation expectation drifted from {reference} to {excitation} at t = {t}"
                )));
            }
            let d = reduce(&s);
            let p = d.purity();
            if !(0.5 - PURITY_TOL..=1.0 + PURITY_TOL).contains(&p) {
                return Err(Error::Invariant(format!("purity {p} out of [1/2, 1] at t = {t}")));
            }
            purity_exact = Some(p);
            exact_density = Some(d);
        }
        let purity_analytic = params.as_ref().map(|p| purity_t1(t, p));
        let density = match exact_density {
            Some(d) => d,
            None => analytic_rho(t, params.as_ref().unwrap()),
        };
        Ok(SweepRow {
            t,
            t_over_tr: t / t_r,
            purity_exact,
            purity_analytic,
            a: density.a(),
            re_b: density.b().re,
            im_b: density.b().im,
            inversion: density.inversion(),
        })
    });
    rows.into_iter().collect()
}

/// Summary of an exact-vs-closed-form comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CompareReport {
    /// `max_t |P_exact − P_analytic|` over the grid.
    pub max_abs_deviation: f64,
    /// Root-mean-square of the same deviation.
    pub rms_deviation: f64,
    /// Fitted Gaussian rate `c` of the transient, from an ordinary
    /// least-squares fit of `ln(P_exact − 1/2)` against `t²` over
    /// `t ∈ [0, t_c]` on a dedicated grid of [`TRANSIENT_FIT_POINTS`] points.
    pub transient_rate: f64,
    /// The rate the transient envelope predicts: `4/t_c² = λ²`.
    pub transient_rate_reference: f64,
    /// Exact purity at `t = t_r/2`, the mid-point between collapse and
    /// revival.
    pub purity_at_half_revival: f64,
}

/// Grid size of the transient-envelope fit in [`compare_report`].
pub const TRANSIENT_FIT_POINTS: usize = 200;

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max_abs_deviation = {}", self.max_abs_deviation)?;
        writeln!(f, "rms_deviation = {}", self.rms_deviation)?;
        writeln!(f, "transient_rate = {}", self.transient_rate)?;
        writeln!(f, "transient_rate_reference = {}", self.transient_rate_reference)?;
        write!(f, "purity_at_half_revival = {}", self.purity_at_half_revival)
    }
}

/// Compare the exact and closed-form purities for `cfg` (which must have
/// `mode = both`) and fit the transient collapse.
pub fn compare_report(cfg: &RunConfig) -> Result<CompareReport> {
    if cfg.mode != Mode::Both {
        return Err(Error::config("mode", "compare requires mode = both"));
    }
    let rows = run_sweep(cfg)?;
    let deviations: Vec<f64> = rows
        .iter()
        .map(|r| (r.purity_exact.unwrap() - r.purity_analytic.unwrap()).abs())
        .collect();
    let max_abs_deviation = deviations.iter().cloned().fold(0.0, f64::max);
    let rms_deviation =
        (deviations.iter().map(|d| d * d).sum::<f64>() / deviations.len() as f64).sqrt();

    let atom = cfg.build_atom()?;
    let field = cfg.build_field()?;
    let t_c = 2.0 / cfg.lambda;
    let fit_times: Vec<f64> = (0..TRANSIENT_FIT_POINTS)
        .map(|k| t_c * k as f64 / (TRANSIENT_FIT_POINTS - 1) as f64)
        .collect();
    let purities = map_slice(&fit_times, |&t| {
        reduce(&evolve(&atom, &field, cfg.lambda, t)).purity()
    });
    let points: Vec<(f64, f64)> = fit_times
        .iter()
        .zip(&purities)
        .filter(|(_, &p)| p > 0.5)
        .map(|(&t, &p)| (t * t, (p - 0.5).ln()))
        .collect();
    let transient_rate = -ols_slope(&points);

    let purity_at_half_revival =
        reduce(&evolve(&atom, &field, cfg.lambda, 0.5 * cfg.revival_time())).purity();

    Ok(CompareReport {
        max_abs_deviation,
        rms_deviation,
        transient_rate,
        transient_rate_reference: cfg.lambda * cfg.lambda,
        purity_at_half_revival,
    })
}

fn ols_slope(points: &[(f64, f64)]) -> f64 {
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
