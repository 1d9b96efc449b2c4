use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use entdist::heuristic::{HeuristicParams, HeuristicSource};
use entdist::scenarios::ResourceRegime;

use crate::error::CliError;

/// Radii used by `sweep` when none are given.
pub const DEFAULT_SWEEP_RADII: [f64; 6] = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0];

#[derive(Debug, Parser)]
#[command(name = "entdist", version, about = "Star vs. ring entanglement distribution")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Average entanglement on both layouts for each user count, plus the crossover.
    Compare(SweepArgs),
    /// `compare` over a grid of radii (defaults to 0.1, 0.5, 1, 2, 5, 10).
    Sweep(SweepArgs),
    /// Plot-ready CSV for one of the standard figures.
    Figure(FigureArgs),
    /// Randomized oracle-vs-formula checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegimeArg {
    Asymptotic,
    OnePairTraveling,
    OnePairPerWirelength,
    /// Heuristic model with watched amplitude damping on every wirelength.
    HeuristicAd,
    /// Heuristic model with fixed parameters.
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value = "one-pair-traveling")]
    pub regime: RegimeArg,

    #[arg(long, default_value_t = 2)]
    pub n_min: usize,

    #[arg(long, default_value_t = 20)]
    pub n_max: usize,

    /// Network radius; repeat for several.
    #[arg(long = "radius")]
    pub radii: Vec<f64>,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,

    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Distillable entanglement E_D for the heuristic regimes.
    #[arg(long, default_value_t = 0.5)]
    pub e_distillable: f64,

    /// Success probability p for `--regime heuristic`.
    #[arg(long)]
    pub p_success: Option<f64>,

    /// Boost δ_s for `--regime heuristic`.
    #[arg(long)]
    pub delta_success: Option<f64>,

    /// Drop δ_f for `--regime heuristic`.
    #[arg(long)]
    pub delta_fail: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FigureId {
    /// One pair travels the whole route.
    Fig2,
    /// One pair per wirelength, joined by swapping.
    Fig3,
    /// Total wire of each layout.
    ClassicalWire,
    /// Heuristic model over watched amplitude-damped channels.
    HeuristicAd,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[arg(value_enum)]
    pub figure: FigureId,

    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,

    #[arg(long, default_value_t = 2)]
    pub n_min: usize,

    #[arg(long, default_value_t = 20)]
    pub n_max: usize,

    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Validated form of [`SweepArgs`].
#[derive(Debug, Clone, Serialize)]
pub struct SweepConfig {
    pub regime: RegimeArg,
    #[serde(skip)]
    pub model: ResourceRegime,
    pub n_min: usize,
    pub n_max: usize,
    pub radii: Vec<f64>,
    pub format: Format,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

impl SweepArgs {
    pub fn into_config(self, default_radii: &[f64]) -> Result<SweepConfig, CliError> {
        check_party_range(self.n_min, self.n_max)?;
        let radii = if self.radii.is_empty() {
            default_radii.to_vec()
        } else {
            self.radii.clone()
        };
        for &r in &radii {
            check_radius(r)?;
        }
        Ok(SweepConfig {
            regime: self.regime,
            model: self.model()?,
            n_min: self.n_min,
            n_max: self.n_max,
            radii,
            format: self.format,
            output: self.output,
        })
    }

    fn model(&self) -> Result<ResourceRegime, CliError> {
        let usage = |e: entdist::Error| CliError::Usage(e.to_string());
        Ok(match self.regime {
            RegimeArg::Asymptotic => ResourceRegime::Asymptotic,
            RegimeArg::OnePairTraveling => ResourceRegime::OnePairTraveling,
            RegimeArg::OnePairPerWirelength => ResourceRegime::OnePairPerWirelength,
            RegimeArg::HeuristicAd => {
                // validate E_D up front
                HeuristicParams::new(self.e_distillable, 1.0 - self.e_distillable, self.e_distillable, 1.0)
                    .map_err(usage)?;
                ResourceRegime::Heuristic(HeuristicSource::AmplitudeDamped {
                    e_distillable: self.e_distillable,
                })
            }
            RegimeArg::Heuristic => {
                let (Some(p), Some(ds), Some(df)) =
                    (self.p_success, self.delta_success, self.delta_fail)
                else {
                    return Err(CliError::Usage(
                        "--regime heuristic needs --p-success, --delta-success and --delta-fail"
                            .into(),
                    ));
                };
                let params = HeuristicParams::new(self.e_distillable, ds, df, p).map_err(usage)?;
                ResourceRegime::Heuristic(HeuristicSource::Fixed(params))
            }
        })
    }
}

pub fn check_party_range(n_min: usize, n_max: usize) -> Result<(), CliError> {
    if n_min < 2 {
        return Err(CliError::Usage(format!("--n-min must be at least 2, got {n_min}")));
    }
    if n_max < n_min {
        return Err(CliError::Usage(format!(
            "--n-max ({n_max}) must not be below --n-min ({n_min})"
        )));
    }
    Ok(())
}

pub fn check_radius(radius: f64) -> Result<(), CliError> {
    if radius > 0.0 && radius.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("--radius must be positive, got {radius}")))
    }
}
