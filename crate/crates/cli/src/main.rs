//! `qbox`: data files for node trajectories, amplitude sweeps, mean node
//! positions and time-averaged density heatmaps, plus a self-check suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
//! 3 I/O error.

mod output;
mod verify;

use std::f64::consts::FRAC_1_SQRT_2;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qbox_core::{
    amplitude_sweep, fit_power_law, heatmap, time_avg_node_position, track_trajectory_with_grid, NodeKind, RatioA,
    Spacing, SweepSpec, TwoStateSuperposition, WellConfig,
};

use crate::output::{Cell, Format, Table};

#[derive(Debug)]
enum CliError {
    Invalid(String),
    Io(std::io::Error),
    VerificationFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(msg) => write!(f, "invalid arguments: {msg}"),
            CliError::Io(e) => write!(f, "I/O error: {e}"),
            CliError::VerificationFailed(n) => write!(f, "{n} verification check(s) failed"),
        }
    }
}

impl From<qbox_core::Error> for CliError {
    fn from(e: qbox_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "qbox",
    version,
    about = "Oscillating quasi-nodes of two-state superpositions in an infinite well"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Node position versus time.
    Trajectory {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value_t = KindArg::Analytic)]
        kind: KindArg,
    },
    /// Oscillation amplitude versus A, with a log-log power-law fit.
    AmplitudeSweep {
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Time-averaged node position for a list of ratios A.
    AvgPosition {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated ratios; defaults to 0.05, 0.10, ..., 0.95, 0.99.
        #[arg(long)]
        ratios: Option<String>,
    },
    /// Time-averaged density over (mixing angle, position).
    Heatmap {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, default_value_t = 64)]
        x_count: usize,
        #[arg(long, default_value_t = 64)]
        mix_count: usize,
    },
    /// Run the invariant checks and report one line per check.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        /// Multiplies every tolerance; values below 1 tighten the checks.
        #[arg(long, default_value_t = 1.0, hide = true)]
        tolerance_scale: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Analytic,
    Repart,
    Minimum,
    TrueZero,
}

impl From<KindArg> for NodeKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Analytic => NodeKind::AnalyticFormula,
            KindArg::Repart => NodeKind::RealPartZero,
            KindArg::Minimum => NodeKind::DensityMinimum,
            KindArg::TrueZero => NodeKind::TrueZero,
        }
    }
}

#[derive(Debug, Clone, Args)]
struct RunArgs {
    /// Well width.
    #[arg(long = "a", default_value_t = 1.0)]
    width: f64,
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    /// Real coefficient of the ground state.
    #[arg(long, default_value_t = FRAC_1_SQRT_2, allow_negative_numbers = true)]
    c1: f64,
    /// Real coefficient of the first excited state.
    #[arg(long, default_value_t = FRAC_1_SQRT_2, allow_negative_numbers = true)]
    c2: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    t_start: f64,
    /// End of the half-open time window; defaults to one beat period.
    #[arg(long, allow_negative_numbers = true)]
    t_end: Option<f64>,
    #[arg(long, default_value_t = 256)]
    time_samples: usize,
    /// Spatial scan cells for the numerical node finders.
    #[arg(long, default_value_t = 2048)]
    grid: usize,
    /// Seed for the randomized checks of `verify`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; inferred from the `--out` extension when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl RunArgs {
    fn well(&self) -> CliResult<WellConfig> {
        Ok(WellConfig::new(self.width, self.mass, self.hbar)?)
    }

    fn state(&self) -> CliResult<TwoStateSuperposition> {
        Ok(TwoStateSuperposition::real(self.c1, self.c2)?)
    }

    fn emit(&self, table: &Table) -> CliResult {
        let format = Format::resolve(self.format, self.out.as_deref());
        table.write(self.out.as_deref(), format)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 0.05)]
    a_min: f64,
    #[arg(long, default_value_t = 1.0)]
    a_max: f64,
    #[arg(long, default_value_t = 64)]
    a_count: usize,
    /// Logarithmic spacing of A; pass `--log-spacing false` for linear.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    log_spacing: bool,
}

fn cmd_trajectory(run: &RunArgs, kind: KindArg) -> CliResult {
    let cfg = run.well()?;
    let state = run.state()?;
    let t_end = run.t_end.unwrap_or(run.t_start + cfg.beat_period());
    let tr = track_trajectory_with_grid(
        &cfg,
        &state,
        kind.into(),
        run.t_start,
        t_end,
        run.time_samples,
        run.grid,
    )?;
    let mut table = Table::new(vec!["t", "position", "kind"]);
    for s in tr.samples() {
        table.push(vec![s.t.into(), s.position.into(), Cell::Text(s.kind.as_str())]);
    }
    run.emit(&table)
}

fn cmd_amplitude_sweep(run: &RunArgs, args: &SweepArgs) -> CliResult {
    let cfg = run.well()?;
    let spec = SweepSpec {
        a_min: args.a_min,
        a_max: args.a_max,
        count: args.a_count,
        spacing: if args.log_spacing {
            Spacing::Logarithmic
        } else {
            Spacing::Linear
        },
    };
    let sweep = amplitude_sweep(&cfg, spec)?;
    let fit = fit_power_law(&sweep)?;
    let mut table = Table::new(vec!["A", "amplitude"]);
    for &(a, amp) in &sweep.entries {
        table.push(vec![a.into(), amp.into()]);
    }
    table.set_trailer(
        "#fit",
        vec![
            ("coefficient", fit.coefficient),
            ("exponent", fit.exponent),
            ("rms_log_residual", fit.rms_log_residual),
        ],
    );
    run.emit(&table)
}

fn default_ratios() -> Vec<f64> {
    let mut v: Vec<f64> = (1..=19).map(|i| f64::from(i) * 0.05).collect();
    v.push(0.99);
    v
}

fn parse_ratios(list: &str) -> CliResult<Vec<f64>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|e| CliError::Invalid(format!("bad ratio `{s}`: {e}")))
        })
        .collect()
}

fn cmd_avg_position(run: &RunArgs, ratios: Option<&str>) -> CliResult {
    let cfg = run.well()?;
    let ratios = match ratios {
        Some(list) => parse_ratios(list)?,
        None => default_ratios(),
    };
    if ratios.is_empty() {
        return Err(CliError::Invalid("ratio list is empty".into()));
    }
    let mut table = Table::new(vec!["A", "mean_position"]);
    for a in ratios {
        let mean = time_avg_node_position(&cfg, RatioA::new(a)?, qbox_core::analysis::TIME_AVERAGE_SAMPLES)?;
        table.push(vec![a.into(), mean.into()]);
    }
    run.emit(&table)
}

fn cmd_heatmap(run: &RunArgs, x_count: usize, mix_count: usize) -> CliResult {
    let cfg = run.well()?;
    let grid = heatmap(&cfg, x_count, mix_count)?;
    let mut table = Table::new(vec!["theta", "x", "density"]);
    for (j, &theta) in grid.mix_values().iter().enumerate() {
        for (&x, &d) in grid.x_values().iter().zip(grid.row(j)) {
            table.push(vec![theta.into(), x.into(), d.into()]);
        }
    }
    run.emit(&table)
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Trajectory { run, kind } => cmd_trajectory(run, *kind),
        Command::AmplitudeSweep { run, sweep } => cmd_amplitude_sweep(run, sweep),
        Command::AvgPosition { run, ratios } => cmd_avg_position(run, ratios.as_deref()),
        Command::Heatmap {
            run,
            x_count,
            mix_count,
        } => cmd_heatmap(run, *x_count, *mix_count),
        Command::Verify { run, tolerance_scale } => {
            let failed = verify::run_all(run.seed, *tolerance_scale);
            if failed == 0 {
                Ok(())
            } else {
                Err(CliError::VerificationFailed(failed))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qbox: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
