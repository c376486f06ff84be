use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fracgrow_core::{Convention, EtaMode};

use crate::config::{Overrides, SERIES_DEPTH_ENV};

#[derive(Debug, Parser)]
#[command(
    name = "fracgrow",
    version,
    about = "Fractional-order growth model: prediction, order fitting and fractional calculus utilities"
)]
pub struct Cli {
    /// TOML config file (keys: r, orders, convention, eta_mode, series_depth, month8_override, m, etas).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Write the result bundle as JSON (predict, fit, render).
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Write the months × orders table as CSV (predict, fit, render).
    #[arg(long, global = true, value_name = "PATH")]
    pub csv: Option<PathBuf>,
    /// Write long-format plot data: month, order, predicted, observed (predict, fit, render).
    #[arg(long, global = true, value_name = "PATH")]
    pub plot: Option<PathBuf>,
    /// Replace the rate of the interval ending at month 8.
    #[arg(
        long = "correct-month8",
        global = true,
        value_name = "ETA",
        allow_negative_numbers = true
    )]
    pub correct_month8: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the prediction grid from observations, the published schedule, or config rates.
    Predict(PredictArgs),
    /// Score each order against observations and pick the best.
    Fit(FitArgs),
    /// Gamma and Mittag-Leffler functions.
    #[command(subcommand)]
    Special(SpecialCmd),
    /// Caputo derivative of an exponential or power function.
    Caputo(CaputoArgs),
    /// Dump the decomposition-series terms of the growth model.
    Series(SeriesArgs),
    /// Re-render CSV / plot / JSON outputs from a saved JSON bundle.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    /// Initial growth rate, in (0, 1).
    #[arg(long, allow_negative_numbers = true)]
    pub r: Option<f64>,
    /// Comma-separated fractional orders in (0, 1].
    #[arg(long, value_delimiter = ',')]
    pub orders: Option<Vec<f64>>,
    #[arg(long, value_parser = parse_convention)]
    pub convention: Option<Convention>,
    #[arg(long = "eta-mode", value_parser = parse_eta_mode)]
    pub eta_mode: Option<EtaMode>,
    #[arg(long = "series-depth", env = SERIES_DEPTH_ENV)]
    pub series_depth: Option<usize>,
    /// Initial length.
    #[arg(long)]
    pub m: Option<f64>,
}

impl ModelArgs {
    pub fn overrides(&self, month8: Option<f64>) -> Overrides {
        Overrides {
            r: self.r,
            orders: self.orders.clone(),
            convention: self.convention,
            eta_mode: self.eta_mode,
            series_depth: self.series_depth,
            month8_override: month8,
            m: self.m,
        }
    }
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Observation CSV (`month,length`); rates are estimated from it.
    #[arg(long, value_name = "PATH", conflicts_with = "abalone")]
    pub obs: Option<PathBuf>,
    /// Use the published abalone rate schedule and report deviations from its table.
    #[arg(long)]
    pub abalone: bool,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long, value_name = "PATH")]
    pub obs: PathBuf,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Subcommand)]
pub enum SpecialCmd {
    /// Γ(x).
    Gamma {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// ln|Γ(x)|.
    LnGamma {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Mittag-Leffler E_{α,β}(z); β defaults to 1.
    Ml {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    /// r^β e^{rs}, the shortcut rule for exponentials.
    Paper,
    /// Closed form (Mittag-Leffler for exponentials, Gamma ratio for powers).
    Exact,
    /// Product integration on a graded mesh.
    Numeric,
}

#[derive(Debug, Args)]
pub struct CaputoArgs {
    /// Order β in (0, 1].
    #[arg(long)]
    pub beta: f64,
    #[arg(long, value_enum, default_value_t = Rule::Exact)]
    pub rule: Rule,
    /// Print every applicable rule with differences from the exact value.
    #[arg(long)]
    pub compare: bool,
    /// Evaluation points (repeat or comma-separate).
    #[arg(long, required = true, value_delimiter = ',', num_args = 1..)]
    pub s: Vec<f64>,
    /// Rate of f(s) = scale·e^{rs}.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub r: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub scale: f64,
    /// Differentiate f(s) = (s − a)^γ instead of an exponential.
    #[arg(long, value_name = "GAMMA", allow_negative_numbers = true)]
    pub power: Option<f64>,
    /// Lower terminal for --power.
    #[arg(long, default_value_t = 0.0, requires = "power")]
    pub a: f64,
    #[arg(long, default_value_t = 4096)]
    pub nodes: usize,
    #[arg(long, default_value_t = 2.0)]
    pub grading: f64,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Growth rate η.
    #[arg(long, allow_negative_numbers = true)]
    pub eta: f64,
    /// Order β in (0, 1].
    #[arg(long)]
    pub beta: f64,
    /// Evaluate the partial sum at this age s (needs --t).
    #[arg(long, requires = "t")]
    pub s: Option<f64>,
    /// Evaluate the partial sum at this time t (needs --s).
    #[arg(long, requires = "s")]
    pub t: Option<f64>,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Saved JSON bundle.
    #[arg(long, value_name = "PATH")]
    pub from: PathBuf,
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_eta_mode(s: &str) -> Result<EtaMode, String> {
    s.parse().map_err(|e| format!("{e}"))
}
