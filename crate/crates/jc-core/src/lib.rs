//! Purity dynamics of a two-level atom resonantly coupled to a single
//! quantized cavity mode.
//!
//! The conserved excitation number makes the resonant dynamics exactly
//! solvable manifold by manifold, so the joint state at any time — and from
//! it the reduced atomic density matrix, purity, and inversion — is available
//! in closed form over a truncated Fock space. For large-`n̄` coherent fields
//! the purity additionally admits Gaussian-envelope approximations whose
//! collapse and revival timescales are `t_c = 2/λ` and `t_r = 2π√n̄/λ`.
//!
//! Module map:
//!
//! - [`states`] — initial atomic and field states (coherent, top-hat, Fock);
//! - [`evolution`] — exact interaction-picture evolution and grid sweeps;
//! - [`reduction`] — partial trace over the field, purity, inversion;
//! - [`analytic`] — the closed-form density matrix and purity envelopes;
//! - [`asymptotics`] — the Poisson-weighted oscillatory sums behind them;
//! - [`phasegauge`] — the `R(θ, φ)` phase gauge and its invariances;
//! - [`sweep`] — reproducible parameter sweeps, comparison reports, CSV.

pub mod analytic;
pub mod asymptotics;
mod error;
pub mod evolution;
mod exec;
pub mod phasegauge;
pub mod reduction;
pub mod states;
pub mod sweep;

pub use analytic::{
    analytic_rho, collapse_time, general_theta_substitution, purity_max, purity_min,
    purity_t1, purity_theta, revival_time, AnalyticParams,
};
pub use asymptotics::{
    gaussian_characteristic, sqrt_linearization, sum_s1_closed, sum_s1_numeric,
    sum_s2_closed, sum_s2_numeric, sum_s3_closed, sum_s3_numeric, SumParams,
};
pub use error::{Error, Result};
pub use evolution::{evolve, evolve_grid, JointState};
pub use phasegauge::{apply_gauge_joint, apply_gauge_product};
pub use reduction::{reduce, AtomDensity};
pub use states::{default_cutoff, AtomState, FieldState};
pub use sweep::{
    compare_report, run_sweep, write_csv, CompareReport, FieldKind, Mode, RunConfig,
    SweepRow,
};
