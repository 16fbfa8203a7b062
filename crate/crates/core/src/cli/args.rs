use std::f64::consts::{FRAC_PI_2, TAU};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(
    name = "dephasim",
    version,
    about = "Entanglement of two spins dephasing through shared and local thermal baths",
    args_override_self = true
)]
pub struct Cli {
    /// Read `key = value` lines (flag names without dashes) from FILE; flags on
    /// the command line take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: RunConfig,
}

/// A fully resolved invocation.
#[derive(Subcommand, Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum RunConfig {
    /// Concurrence, |P_N|, S and Γ along rescaled time.
    Timeseries(TimeseriesArgs),
    /// Peak concurrence for several collective couplings.
    SweepKappa(SweepKappaArgs),
    /// Peak concurrence and collapse time against the spin count.
    SweepN(SweepNArgs),
    /// Concurrence over a grid of initial states.
    GridPv(GridPvArgs),
    /// Peak concurrence with the collective coupling scaled as kappa_c / N^eta.
    SweepEta(SweepEtaArgs),
    /// Distance of the evolved state from its N → ∞ limit.
    Limits(LimitsArgs),
    /// Exponential fit of two columns of an existing output table.
    Fit(FitArgs),
}

impl RunConfig {
    pub fn name(&self) -> &'static str {
        match self {
            RunConfig::Timeseries(_) => "timeseries",
            RunConfig::SweepKappa(_) => "sweep-kappa",
            RunConfig::SweepN(_) => "sweep-n",
            RunConfig::GridPv(_) => "grid-pv",
            RunConfig::SweepEta(_) => "sweep-eta",
            RunConfig::Limits(_) => "limits",
            RunConfig::Fit(_) => "fit",
        }
    }

    pub fn output(&self) -> &OutputArgs {
        match self {
            RunConfig::Timeseries(a) => &a.output,
            RunConfig::SweepKappa(a) => &a.output,
            RunConfig::SweepN(a) => &a.output,
            RunConfig::GridPv(a) => &a.output,
            RunConfig::SweepEta(a) => &a.output,
            RunConfig::Limits(a) => &a.output,
            RunConfig::Fit(a) => &a.output,
        }
    }
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct BathArgs {
    /// Cutoff in units of the temperature, k_c = epsilon * theta.
    #[arg(long, default_value_t = 1.0)]
    pub epsilon: f64,
    /// Temperature in units of the bath energy scale.
    #[arg(long, default_value_t = 1.0)]
    pub theta: f64,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct StateArgs {
    /// Population of |+> for both retained spins.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Real coherence of both retained spins; needs v^2 <= p(1-p).
    #[arg(long, default_value_t = 0.48, allow_negative_numbers = true)]
    pub v: f64,
    /// Population of |+> for every traced-out spin.
    #[arg(long, default_value_t = 0.5)]
    pub background_p: f64,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct WindowArgs {
    /// End of the window in rescaled time kappa_eff^2 nu_c t.
    #[arg(long, default_value_t = TAU)]
    pub tau_max: f64,
    /// Minimum number of grid points; refined automatically for large N.
    #[arg(long, default_value_t = 4000)]
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output path, or `-` for standard output.
    #[arg(long, default_value = "-")]
    pub output: String,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct TimeseriesArgs {
    /// Total number of spins.
    #[arg(long, default_value_t = 2)]
    pub n: u64,
    #[arg(long, default_value_t = 0.05)]
    pub kappa_c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub kappa_l: f64,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub bath: BathArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub window: WindowArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct SweepKappaArgs {
    #[arg(long, action = clap::ArgAction::Set, value_delimiter = ',', default_values_t = [0.04, 0.1, 0.2, 0.4])]
    pub kappas: Vec<f64>,
    #[arg(long, action = clap::ArgAction::Set, value_delimiter = ',', default_values_t = [2u64, 4])]
    pub ns: Vec<u64>,
    #[arg(long, default_value_t = 0.0)]
    pub kappa_l: f64,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub bath: BathArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub window: WindowArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct SweepNArgs {
    #[arg(long, default_value_t = 2)]
    pub n_min: u64,
    #[arg(long, default_value_t = 200)]
    pub n_max: u64,
    #[arg(long, default_value_t = 1)]
    pub n_step: u64,
    #[arg(long, default_value_t = 0.05)]
    pub kappa_c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub kappa_l: f64,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    /// Spin-count range of the exponential fits reported in the metadata.
    #[arg(long, default_value_t = 10)]
    pub fit_min: u64,
    #[arg(long, default_value_t = 150)]
    pub fit_max: u64,
    #[command(flatten)]
    #[serde(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub bath: BathArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub window: WindowArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridMode {
    /// Two spins with fixed phase and decay; axes are (p, v) shared by both spins.
    Abstract,
    /// Peak concurrence over time; axes are (p1, p2) with v_i = p_i.
    Dynamic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constraint {
    Exclude,
    Clip,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct GridPvArgs {
    #[arg(long, value_enum, default_value_t = GridMode::Abstract)]
    pub mode: GridMode,
    /// Points per axis [abstract: 51, dynamic: 26].
    #[arg(long)]
    pub points: Option<usize>,
    /// Axis ranges [abstract: p in 0..1, v in 0..0.5; dynamic: 0..0.5 both].
    #[arg(long)]
    pub x_min: Option<f64>,
    #[arg(long)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub y_min: Option<f64>,
    #[arg(long)]
    pub y_max: Option<f64>,
    #[arg(long, value_enum, default_value_t = Constraint::Exclude)]
    pub constraint: Constraint,
    /// Abstract mode: the collective phase kappa^2 S.
    #[arg(long, default_value_t = FRAC_PI_2)]
    pub phase: f64,
    /// Abstract mode: the decay kappa^2 Gamma.
    #[arg(long, default_value_t = 0.0)]
    pub decay: f64,
    /// Dynamic mode: total number of spins [default: 40].
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long, default_value_t = 0.05)]
    pub kappa_c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub kappa_l: f64,
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    #[arg(long, default_value_t = 0.5)]
    pub background_p: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub bath: BathArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub window: WindowArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

impl GridPvArgs {
    /// Replace unset mode-dependent options by their defaults.
    pub fn resolve(&mut self) {
        let (points, hi_x, n) = match self.mode {
            GridMode::Abstract => (51, 1.0, 2),
            GridMode::Dynamic => (26, 0.5, 40),
        };
        self.points.get_or_insert(points);
        self.x_min.get_or_insert(0.0);
        self.x_max.get_or_insert(hi_x);
        self.y_min.get_or_insert(0.0);
        self.y_max.get_or_insert(0.5);
        self.n.get_or_insert(n);
    }
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct SweepEtaArgs {
    #[arg(long, action = clap::ArgAction::Set, value_delimiter = ',', default_values_t = [0.0, 0.1, 0.25, 0.3, 0.4, 0.5])]
    pub etas: Vec<f64>,
    #[arg(long, default_value_t = 10)]
    pub n_min: u64,
    #[arg(long, default_value_t = 180)]
    pub n_max: u64,
    #[arg(long, default_value_t = 10)]
    pub n_step: u64,
    #[arg(long, default_value_t = 0.2)]
    pub kappa_c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub kappa_l: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub bath: BathArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub window: WindowArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct LimitsArgs {
    #[arg(long, action = clap::ArgAction::Set, value_delimiter = ',', default_values_t = [100u64, 1000, 10_000, 100_000])]
    pub ns: Vec<u64>,
    /// Below 1/4 the comparison uses the X-state limit, above it the product limit.
    #[arg(long, default_value_t = 0.1)]
    pub eta: f64,
    /// Time at which states are compared.
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long, default_value_t = 1.0)]
    pub kappa_c: f64,
    #[arg(long, default_value_t = 0.0)]
    pub kappa_l: f64,
    #[command(flatten)]
    #[serde(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub bath: BathArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone, PartialEq, Serialize)]
pub struct FitArgs {
    /// A CSV table written by this tool.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "n")]
    pub x_column: String,
    #[arg(long, default_value = "c_max")]
    pub y_column: String,
    /// Only rows with x in [x_min, x_max] are used.
    #[arg(long)]
    pub x_min: Option<f64>,
    #[arg(long)]
    pub x_max: Option<f64>,
    #[command(flatten)]
    #[serde(flatten)]
    pub output: OutputArgs,
}
