//! `jcsim` — purity dynamics of a two-level atom in a resonant cavity.
//!
//! Subcommands:
//! - `sweep`   run one time sweep and emit CSV (stdout or `--out`);
//! - `compare` run an exact-vs-closed-form sweep and print a summary report;
//! - `fig1`    coherent-field purity datasets (nbar 400 and 16, several
//!   relative phases, long time scale);
//! - `fig2`    transient-collapse datasets (small time scale, theta = pi/2);
//! - `fig3`    top-hat field datasets with the coherent-field closed form
//!   alongside.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical-invariant
//! violation (including truncation failures), 1 anything else.

mod config;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::Overrides;
use jc_core::{
    compare_report, run_sweep, write_csv, Error, FieldKind, Mode, Result, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "jcsim",
    version,
    about = "Exact and closed-form purity dynamics of a two-level atom in a resonant cavity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a time sweep and write the dataset as CSV.
    Sweep(SweepArgs),
    /// Compare exact and closed-form purity and print a summary report.
    Compare(SweepArgs),
    /// Coherent-field purity datasets: nbar in {400, 16} x theta in {0, pi/4, pi/2}.
    Fig1(FigArgs),
    /// Transient-collapse datasets at theta = pi/2, t up to 5 collapse times.
    Fig2(FigArgs),
    /// Top-hat datasets (D in {10, 20, 30, 80}) with the coherent closed form.
    Fig3(FigArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Coherent,
    Tophat,
    Fock,
}

impl From<FieldArg> for FieldKind {
    fn from(v: FieldArg) -> Self {
        match v {
            FieldArg::Coherent => FieldKind::Coherent,
            FieldArg::Tophat => FieldKind::Tophat,
            FieldArg::Fock => FieldKind::Fock,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Analytic,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(v: ModeArg) -> Self {
        match v {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Analytic => Mode::Analytic,
            ModeArg::Both => Mode::Both,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Mean photon number (top-hat center / Fock index for those fields).
    #[arg(long)]
    nbar: Option<f64>,
    /// Atom-cavity coupling constant.
    #[arg(long)]
    lambda: Option<f64>,
    /// Ground-level probability of the initial atom.
    #[arg(long)]
    pg: Option<f64>,
    /// Relative atomic phase (radians).
    #[arg(long)]
    theta: Option<f64>,
    /// Field phase (radians).
    #[arg(long)]
    phi: Option<f64>,
    /// Initial field preparation.
    #[arg(long, value_enum)]
    field: Option<FieldArg>,
    /// Half-width D of the top-hat window.
    #[arg(long)]
    tophat_halfwidth: Option<usize>,
    /// Fock-space cutoff (defaults to an automatic safe value).
    #[arg(long)]
    cutoff: Option<usize>,
    /// Grid extent in units of the revival time.
    #[arg(long = "tmax-tr")]
    tmax_tr: Option<f64>,
    /// Number of grid points.
    #[arg(long)]
    steps: Option<usize>,
    /// Which purity columns to compute.
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// CSV output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key = value config file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl SweepArgs {
    fn overrides(&self) -> Overrides {
        Overrides {
            nbar: self.nbar,
            lambda: self.lambda,
            p_g: self.pg,
            theta: self.theta,
            phi: self.phi,
            field_kind: self.field.map(Into::into),
            tophat_halfwidth: self.tophat_halfwidth,
            cutoff: self.cutoff.map(Some),
            t_max_over_tr: self.tmax_tr,
            steps: self.steps,
            mode: self.mode.map(Into::into),
            output_path: self.out.clone(),
        }
    }

    fn resolve(&self) -> Result<RunConfig> {
        config::resolve(self.config.as_deref(), &self.overrides())
    }
}

#[derive(Args)]
struct FigArgs {
    /// Directory for the generated CSV files.
    #[arg(long, default_value = "figdata")]
    out_dir: PathBuf,
    /// Grid points per dataset.
    #[arg(long, default_value_t = 2000)]
    steps: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Config { .. } | Error::Domain(_) => 2,
        Error::Truncation(_) | Error::Invariant(_) => 3,
        Error::Io(_) => 1,
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Sweep(args) => {
            let cfg = args.resolve()?;
            let rows = run_sweep(&cfg)?;
            emit(&cfg, &rows)
        }
        Command::Compare(args) => {
            // compare_report itself rejects any mode other than `both`
            let report = compare_report(&args.resolve()?)?;
            println!("{report}");
            Ok(())
        }
        Command::Fig1(args) => fig1(&args),
        Command::Fig2(args) => fig2(&args),
        Command::Fig3(args) => fig3(&args),
    }
}

fn emit(cfg: &RunConfig, rows: &[jc_core::SweepRow]) -> Result<()> {
    match &cfg.output_path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_csv(rows, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            write_csv(rows, stdout.lock())?;
        }
    }
    Ok(())
}

fn write_named(dir: &Path, name: &str, cfg: &RunConfig) -> Result<()> {
    let rows = run_sweep(cfg)?;
    let path = dir.join(name);
    let mut w = BufWriter::new(File::create(&path)?);
    write_csv(&rows, &mut w)?;
    w.flush()?;
    println!("wrote {}", path.display());
    Ok(())
}

fn fig1(args: &FigArgs) -> Result<()> {
    std::fs::create_dir_all(&args.out_dir)?;
    for &nbar in &[400.0, 16.0] {
        for (label, theta) in [("theta0", 0.0), ("theta_pi4", FRAC_PI_4), ("theta_pi2", FRAC_PI_2)]
        {
            let cfg = RunConfig {
                nbar,
                theta,
                steps: args.steps,
                t_max_over_tr: 2.0,
                mode: Mode::Both,
                ..RunConfig::default()
            };
            write_named(&args.out_dir, &format!("fig1_nbar{nbar:.0}_{label}.csv"), &cfg)?;
        }
    }
    Ok(())
}

fn fig2(args: &FigArgs) -> Result<()> {
    std::fs::create_dir_all(&args.out_dir)?;
    for &nbar in &[400.0_f64, 16.0] {
        // five collapse times, expressed as a fraction of the revival time
        let t_max_over_tr = 5.0 / (PI * nbar.sqrt());
        let cfg = RunConfig {
            nbar,
            theta: FRAC_PI_2,
            steps: args.steps,
            t_max_over_tr,
            mode: Mode::Both,
            ..RunConfig::default()
        };
        write_named(&args.out_dir, &format!("fig2_nbar{nbar:.0}.csv"), &cfg)?;
    }
    Ok(())
}

fn fig3(args: &FigArgs) -> Result<()> {
    std::fs::create_dir_all(&args.out_dir)?;
    for &half_width in &[10usize, 20, 30, 80] {
        let cfg = RunConfig {
            nbar: 400.0,
            field_kind: FieldKind::Tophat,
            tophat_halfwidth: half_width,
            theta: 0.0,
            steps: args.steps,
            t_max_over_tr: 2.0,
            mode: Mode::Both,
            ..RunConfig::default()
        };
        write_named(&args.out_dir, &format!("fig3_d{half_width}.csv"), &cfg)?;
    }
    Ok(())
}
