mod commands;
mod config;
mod output;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Command failure classes mapped to exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Invalid input or configuration (exit 1).
    Config(String),
    /// A computation produced no usable result (exit 2).
    Numerical(String),
    /// Reproduction checks failed under --strict (exit 3).
    ChecksFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::ChecksFailed(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "config error: {msg}"),
            CliError::Numerical(msg) => write!(f, "numerical failure: {msg}"),
            CliError::ChecksFailed(n) => write!(f, "{n} reproduction check(s) failed"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Current,
    Enhanced,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Repeater,
    Direct,
}

/// Quantum repeater node simulator and analysis toolkit.
#[derive(Parser)]
#[command(name = "repeater", version, about)]
struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// RNG seed for stochastic commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format where a command supports both.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Turn failed reproduction checks into a nonzero exit.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sweep rates and bounds over fiber length into CSV.
    Rates {
        #[arg(long, default_value_t = 0.0)]
        lmin: f64,
        #[arg(long, default_value_t = 200.0)]
        lmax: f64,
        #[arg(long, default_value_t = 1.0)]
        step: f64,
        #[arg(long, value_enum, default_value_t = Preset::Current)]
        preset: Preset,
    },
    /// Secret-key-rate pipeline at a single fiber length.
    Skr {
        #[arg(long, default_value_t = 50.0)]
        l: f64,
        #[arg(long, value_enum, default_value_t = Preset::Current)]
        preset: Preset,
    },
    /// Repeater-chain time and fidelity projection.
    Chain {
        #[arg(long, default_value_t = 4)]
        levels: u32,
        #[arg(long, default_value_t = 50.0)]
        l0: f64,
        #[arg(long, default_value_t = 0.21)]
        p0: f64,
        #[arg(long, default_value_t = 175e-6)]
        t0: f64,
        #[arg(long, default_value_t = 0.99)]
        f0: f64,
        #[arg(long, default_value_t = 0.99)]
        fswap: f64,
        #[arg(long, default_value_t = 0.98)]
        visibility: f64,
    },
    /// Repeater-advantage bounds for a photon probability and attenuation.
    Bounds {
        #[arg(long, default_value_t = 0.018)]
        p0: f64,
        #[arg(long, default_value_t = 0.0173)]
        gamma: f64,
    },
    /// Monte-Carlo protocol simulation.
    Simulate {
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, value_enum, default_value_t = Mode::Repeater)]
        mode: Mode,
        #[arg(long, default_value_t = 50.0)]
        l: f64,
        /// Use the analytic-model configuration for --preset/--l instead of
        /// the measured per-arm probabilities.
        #[arg(long)]
        from_preset: Option<Preset>,
    },
    /// Two-photon tomography reconstruction from a counts dataset.
    Tomo {
        #[arg(long, visible_alias = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 200)]
        resamples: usize,
    },
    /// Spin-echo visibility prediction.
    Spinecho {
        /// start | mid | end | path to a JSON file with {"nbar": [..4]}.
        #[arg(long, default_value = "start")]
        temps: String,
        #[arg(long, default_value_t = 40)]
        echoes: usize,
        #[arg(long, default_value_t = 40)]
        grid: usize,
        #[arg(long, default_value_t = 0.92)]
        target: f64,
        #[arg(long, default_value_t = 0.0)]
        miscal: f64,
    },
    /// Ion-cavity coupling geometry.
    Coupling {
        /// Emit a CSV scan over the axial offset instead of the summary JSON.
        #[arg(long)]
        offset_scan: bool,
        #[arg(long, default_value_t = -427.0)]
        zmin: f64,
        #[arg(long, default_value_t = 427.0)]
        zmax: f64,
        #[arg(long, default_value_t = 1.0)]
        step: f64,
    },
    /// Photon-efficiency budgets of both nodes.
    Budget,
    /// Recompute every headline number and check it against its tolerance.
    Reproduce {
        /// Use a reduced phonon grid for the spin-echo rows.
        #[arg(long)]
        fast: bool,
    },
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = config::RunConfig::load(cli.config.as_deref())?;
    let out = cli.out.clone().or_else(|| cfg.output.clone());
    let seed = cfg.seed.map_or(cli.seed, |s| if cli.seed != 0 { cli.seed } else { s });
    let format = match (&cli.format, cfg.format.as_deref()) {
        (Some(f), _) => Some(*f),
        (None, Some("csv")) => Some(Format::Csv),
        (None, Some("json")) => Some(Format::Json),
        (None, Some(other)) => {
            return Err(CliError::Config(format!("unknown format '{other}'")));
        }
        (None, None) => None,
    };
    let ctx = commands::Ctx { cfg, out, seed, format, strict: cli.strict };
    match &cli.cmd {
        Cmd::Rates { lmin, lmax, step, preset } => {
            commands::cmd_rates(&ctx, *lmin, *lmax, *step, *preset)
        }
        Cmd::Skr { l, preset } => commands::cmd_skr(&ctx, *l, *preset),
        Cmd::Chain { levels, l0, p0, t0, f0, fswap, visibility } => {
            commands::cmd_chain(&ctx, *levels, *l0, *p0, *t0, *f0, *fswap, *visibility)
        }
        Cmd::Bounds { p0, gamma } => commands::cmd_bounds(&ctx, *p0, *gamma),
        Cmd::Simulate { trials, mode, l, from_preset } => {
            commands::cmd_simulate(&ctx, *trials, *mode, *l, *from_preset)
        }
        Cmd::Tomo { input, resamples } => commands::cmd_tomo(&ctx, input, *resamples),
        Cmd::Spinecho { temps, echoes, grid, target, miscal } => {
            commands::cmd_spinecho(&ctx, temps, *echoes, *grid, *target, *miscal)
        }
        Cmd::Coupling { offset_scan, zmin, zmax, step } => {
            commands::cmd_coupling(&ctx, *offset_scan, *zmin, *zmax, *step)
        }
        Cmd::Budget => commands::cmd_budget(&ctx),
        Cmd::Reproduce { fast } => reproduce::cmd_reproduce(&ctx, *fast),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code())
        }
    }
}
