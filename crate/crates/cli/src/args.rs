//! Command-line flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lamb_core::{DispersionRelation, Model, OscillatorParams};

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "lamb",
    version,
    about = "Spectral solutions for dispersive media driven by a Lamb oscillator"
)]
pub struct Cli {
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the dispersion relations and their predicted regularity.
    Catalog(CatalogArgs),
    /// Periodic profiles as Fourier partial sums, one CSV per time.
    Simulate(SimulateArgs),
    /// Whole-line profiles by quadrature of the inverse Fourier transform.
    Line(LineArgs),
    /// Box-counting dimension of periodic profiles.
    Fractal(FractalArgs),
    /// Differences between partial sums at increasing truncations.
    Converge(ConvergeArgs),
    /// Run the built-in oracle and identity checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    #[value(alias = "bidirectional")]
    Bi,
    #[value(alias = "unidirectional")]
    Uni,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Bi => Model::Bidirectional,
            ModelArg::Uni => Model::Unidirectional,
        }
    }
}

/// Oscillator in Lamb's parameters; the defaults are `C = −1/2`, `c = 1`,
/// `b = 5`, `κ = √0.99`.
#[derive(Debug, Clone, Args)]
pub struct OscillatorArgs {
    /// Amplitude C of the mass displacement.
    #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
    pub amplitude: f64,
    /// Wave speed c of the medium.
    #[arg(long, default_value_t = 1.0)]
    pub wave_speed: f64,
    /// Decay length b = c/(2β).
    #[arg(long, default_value_t = 5.0)]
    pub decay_length: f64,
    /// Spatial frequency κ = ς/c.
    #[arg(long, default_value_t = 0.99_f64.sqrt())]
    pub kappa: f64,
}

impl OscillatorArgs {
    pub fn resolve(&self) -> CliResult<OscillatorParams> {
        Ok(OscillatorParams::from_lamb(
            self.amplitude,
            self.wave_speed,
            self.decay_length,
            self.kappa,
        )?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct RelationArgs {
    /// Dispersion relation by catalog name.
    #[arg(long)]
    pub dispersion: Option<String>,
    /// Relation parameter as key=value; repeatable.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, f64)>,
    #[arg(long, value_enum, default_value = "bi")]
    pub model: ModelArg,
}

impl RelationArgs {
    pub fn resolve(&self) -> CliResult<DispersionRelation> {
        let name = self
            .dispersion
            .as_deref()
            .ok_or_else(|| CliError::Usage("--dispersion is required".into()))?;
        let params: Vec<(&str, f64)> = self.params.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        Ok(DispersionRelation::from_name(name, &params)?)
    }
}

fn parse_param(s: &str) -> Result<(String, f64), String> {
    let (key, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected key=value, got `{s}`"))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("`{value}` is not a number"))?;
    Ok((key.trim().to_string(), value))
}

/// Times must be given, finite, non-negative and distinct.
pub fn resolve_times(times: &[f64]) -> CliResult<Vec<f64>> {
    if times.is_empty() {
        return Err(CliError::Usage("--t is required".into()));
    }
    for (i, t) in times.iter().enumerate() {
        if !(t.is_finite() && *t >= 0.0) {
            return Err(CliError::Usage(format!(
                "time {t} must be finite and non-negative"
            )));
        }
        if times[..i].contains(t) {
            return Err(CliError::Usage(format!("time {t} given twice")));
        }
    }
    Ok(times.to_vec())
}

#[derive(Debug, Clone, Args)]
pub struct CatalogArgs {
    /// Only show the classification for this model.
    #[arg(long, value_enum)]
    pub model: Option<ModelArg>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub oscillator: OscillatorArgs,
    #[command(flatten)]
    pub relation: RelationArgs,
    /// Comma-separated output times.
    #[arg(long = "t", value_delimiter = ',', allow_hyphen_values = true)]
    pub times: Vec<f64>,
    /// Truncation N of the Fourier series.
    #[arg(long, default_value_t = 1000)]
    pub modes: usize,
    /// Number of grid points on [−π, π).
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
    /// Compare against the image-sum solution (wave relation, bi model).
    #[arg(long)]
    pub oracle: bool,
    /// Add the box-counting dimension of each profile to the report.
    #[arg(long)]
    pub fractal: bool,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Re-run the manifest found at this path.
    #[arg(long, conflicts_with_all = [
        "amplitude", "wave_speed", "decay_length", "kappa", "dispersion", "params", "model",
        "times", "modes", "grid", "oracle", "fractal",
    ])]
    pub replay: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct LineArgs {
    #[command(flatten)]
    pub oscillator: OscillatorArgs,
    #[command(flatten)]
    pub relation: RelationArgs,
    #[arg(long = "t", value_delimiter = ',', allow_hyphen_values = true)]
    pub times: Vec<f64>,
    /// Number of grid points on [−xmax, xmax].
    #[arg(long, default_value_t = 2001)]
    pub grid: usize,
    #[arg(long, default_value_t = 10.0)]
    pub xmax: f64,
    /// Wave-number cutoff of the quadrature.
    #[arg(long, default_value_t = 400.0)]
    pub k_max: f64,
    /// Number of midpoint panels on [−k_max, k_max].
    #[arg(long, default_value_t = 1 << 15)]
    pub panels: usize,
    /// Rescale by −2c into the normalization of the classical problem.
    #[arg(long)]
    pub classical: bool,
    /// Compare against Lamb's closed form (wave relation, bi model).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub json: bool,
    /// Re-run the manifest found at this path.
    #[arg(long, conflicts_with_all = [
        "amplitude", "wave_speed", "decay_length", "kappa", "dispersion", "params", "model",
        "times", "grid", "xmax", "k_max", "panels", "classical", "oracle",
    ])]
    pub replay: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FractalArgs {
    #[command(flatten)]
    pub oscillator: OscillatorArgs,
    #[command(flatten)]
    pub relation: RelationArgs,
    #[arg(long = "t", value_delimiter = ',', allow_hyphen_values = true)]
    pub times: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    pub modes: usize,
    #[arg(long, default_value_t = 8192)]
    pub grid: usize,
    /// Number of dyadic box sizes.
    #[arg(long, default_value_t = lamb_core::analysis::fractal::DEFAULT_SCALES)]
    pub scales: usize,
    /// Also estimate the dimension on this many equal windows.
    #[arg(long)]
    pub windows: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub oscillator: OscillatorArgs,
    #[command(flatten)]
    pub relation: RelationArgs,
    #[arg(long = "t", value_delimiter = ',', allow_hyphen_values = true)]
    pub times: Vec<f64>,
    /// Ascending truncations to compare.
    #[arg(long, value_delimiter = ',', default_value = "500,1000,1500")]
    pub truncations: Vec<usize>,
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Use the natural frequency σ in the transient of the bidirectional
    /// coefficients instead of ς; the initial-condition check then fails.
    #[arg(long)]
    pub sigma_variant: bool,
    #[arg(long)]
    pub json: bool,
}
